from . import cobracket, coeffs, lift, lyndon, model, trees, verify

ROUTES = [lyndon, coeffs, cobracket, model, trees, lift, verify]

__all__ = ["ROUTES"]
