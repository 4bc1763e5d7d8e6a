"""Approximate maximum independent sets over B1-VPG (L-shape) intersection graphs."""
