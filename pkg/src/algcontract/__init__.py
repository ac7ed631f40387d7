"""Contractibility and algebraicity of curve configurations at infinity."""
__version__ = "0.1.0"
