"""Marked Gauss diagrams and marked Reidemeister moves."""

from diagrams.model import (
    Arrow,
    Circle,
    ConnectedSumError,
    Event,
    GaussCodeError,
    Head,
    MarkedGaussDiagram,
    Node,
    Tail,
    connected_sum,
    equivalent_up_to_rotation,
    format_gauss_code,
    node_invariants,
    parse_gauss_code,
    reverse,
    rotate,
)
from diagrams.moves import (
    MOVES,
    MoveError,
    MoveKind,
    MoveSpec,
    RegisteredMove,
    apply_move,
    find_moves,
    format_move_spec,
    parse_move_spec,
    register_move,
)

__all__ = [
    "MOVES",
    "Arrow",
    "Circle",
    "ConnectedSumError",
    "Event",
    "GaussCodeError",
    "Head",
    "MarkedGaussDiagram",
    "MoveError",
    "MoveKind",
    "MoveSpec",
    "Node",
    "RegisteredMove",
    "Tail",
    "apply_move",
    "connected_sum",
    "equivalent_up_to_rotation",
    "find_moves",
    "format_gauss_code",
    "format_move_spec",
    "node_invariants",
    "parse_gauss_code",
    "parse_move_spec",
    "register_move",
    "reverse",
    "rotate",
]
