"""Thread-minimal cross-stitch planning on the integer grid."""

from .errors import (
    BudgetExceeded,
    CrosspathError,
    GridFormatError,
    InvalidPlan,
    ModelError,
    NotConstructible,
    PlanOperationError,
    PreconditionError,
    SchemaViolation,
    StitchError,
)
from .escaliers import constructive_escalier_plan, predict_escalier
from .exact import Len
from .formats import emit_grid, parse_grid, plan_from_record, plan_to_record
from .grid import (
    Cell,
    EscalierParams,
    Line,
    Vertex,
    components_4,
    decompose_into_lines,
    gen_escalier,
    gen_line,
    is_4_connected,
    is_8_connected,
)
from .lines import ModelId, generate_model, model_start
from .oracle import Classification, SearchBudget, classify, enumerate_witnesses, find_witness
from .plan import (
    Back,
    Diagonal,
    Direction,
    Front,
    Kind,
    StitchPlan,
    Witness,
    extract_schema,
    glue,
    rotate_start,
    validate,
)
from .render import render_back, render_front, render_schema
from .stitcher import (
    stitch_all_components,
    stitch_component_restricted,
    stitch_iterative,
    stitch_recursive,
)

__version__ = "0.1.0"
