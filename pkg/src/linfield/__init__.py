"""Exact algebra of linearized polynomials over finite fields."""

from linfield.finite_field import FieldTower, make_tower

__all__ = ["FieldTower", "make_tower"]
