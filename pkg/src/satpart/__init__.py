"""Exact solvers for the satisfactory partition problem and its variants."""
from .graph import (CapacityError, Family, FscInstance, Graph, InputError, Partition, Side,
                    generate_family, is_satisfactory, is_valid_fsc_solution, satisfied)
from .oracle import brute_force
from .nd import solve_nd
from .cexpr import CExpr, eval_cexpr, make_irredundant, parse_cexpr
from .cw import solve_cw

__all__ = [
    "CapacityError", "CExpr", "Family", "FscInstance", "Graph", "InputError", "Partition", "Side",
    "brute_force", "eval_cexpr", "generate_family", "is_satisfactory", "is_valid_fsc_solution",
    "make_irredundant", "parse_cexpr", "satisfied", "solve_cw", "solve_nd",
]
