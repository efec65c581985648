"""Patrolling schedules and billiard-type orbits on acute triangles."""

from .geom import (
    DegenerateTriangle,
    EdgeId,
    NotAcute,
    Point,
    PointOffEdge,
    Triangle,
    angles,
    is_acute,
)
from .schedule import (
    GapReport,
    InfeasibleSchedule,
    NoReductionWindow,
    Schedule,
    SchedulePoint,
    cyclic_reduction,
    gap_report,
    is_cyclic,
    is_k_periodic,
    pairwise_gap,
    travel_time,
)
from .orthic import (
    ChannelData,
    OrthicData,
    OutsideChannel,
    ReflectionChain,
    orthic_channel,
    orthic_line,
    orthic_perimeter,
    orthic_schedule,
    orthic_triangle,
    reflection_chain,
    sub_orthic_schedule,
)
from .greedy import (
    GreedyTrace,
    ProjectionEscapesEdge,
    greedy_limit_gap,
    greedy_ratio,
    greedy_ratio_extremes,
    greedy_run,
)
from .search import (
    SearchResult,
    grid_search_3periodic,
    grid_search_6periodic_gap2,
    limited_2k_optimum,
    lower_bound_profile,
    verify_1gap_optimality,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateTriangle",
    "EdgeId",
    "NotAcute",
    "Point",
    "PointOffEdge",
    "Triangle",
    "angles",
    "is_acute",
    "GapReport",
    "InfeasibleSchedule",
    "NoReductionWindow",
    "Schedule",
    "SchedulePoint",
    "cyclic_reduction",
    "gap_report",
    "is_cyclic",
    "is_k_periodic",
    "pairwise_gap",
    "travel_time",
    "ChannelData",
    "OrthicData",
    "OutsideChannel",
    "ReflectionChain",
    "orthic_channel",
    "orthic_line",
    "orthic_perimeter",
    "orthic_schedule",
    "orthic_triangle",
    "reflection_chain",
    "sub_orthic_schedule",
    "GreedyTrace",
    "ProjectionEscapesEdge",
    "greedy_limit_gap",
    "greedy_ratio",
    "greedy_ratio_extremes",
    "greedy_run",
    "SearchResult",
    "grid_search_3periodic",
    "grid_search_6periodic_gap2",
    "limited_2k_optimum",
    "lower_bound_profile",
    "verify_1gap_optimality",
    "__version__",
]
