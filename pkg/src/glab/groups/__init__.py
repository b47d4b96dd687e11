from .amalgam import AmalgamEdge, AmalgamGroup
from .base import Element, GroupModel, check_relators, is_power_of, iter_ball_words
from .bs import BsGroup
from .hnn import HnnEdge, HnnGroup
from .presets import (
    bs_group,
    free_group,
    gp_group,
    group_from_id,
    h1_group,
    h2_group,
    h_group,
    zd_group,
)
from .simple import FreeGroup, ZdGroup

__all__ = [
    "AmalgamEdge",
    "AmalgamGroup",
    "BsGroup",
    "Element",
    "FreeGroup",
    "GroupModel",
    "HnnEdge",
    "HnnGroup",
    "ZdGroup",
    "bs_group",
    "check_relators",
    "free_group",
    "gp_group",
    "group_from_id",
    "h1_group",
    "h2_group",
    "h_group",
    "is_power_of",
    "iter_ball_words",
    "zd_group",
]
