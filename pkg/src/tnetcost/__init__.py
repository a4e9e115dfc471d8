"""Choose a temporal network representation by its encoding cost."""
from .core import (
    Event,
    IntervalGraph,
    LinkStream,
    NodeDictionary,
    Provenance,
    SelfLoopError,
    StatsSummary,
    canonicalize,
    stats,
)
from .ingest import TripletFormat, TripletParseError, parse_triplets, write_triplets
from .transform import aggregate, build_intervals, infer_step, intervals_to_stream
from .costmodel import (
    CostParams,
    CostReport,
    Repr,
    cost_interval_graph,
    cost_link_stream,
    cost_snapshot_edgelist,
    cost_snapshot_matrix,
    report,
    static_costs,
    unit_costs,
)
from .codec import BlobDecodeError, EncodedBlob, decode, encode, realized_length
from .generate import InfeasibleParameters, gen_independent, gen_stable
from .sweep import SweepRow, default_scales, run_sweep, write_sweep_csv

__version__ = "0.1.0"
