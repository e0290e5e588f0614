"""Exact toolkit for Waring ranks, singularities and Hessian geometry of
cubic surfaces and small homogeneous forms."""

__version__ = "0.1.0"
