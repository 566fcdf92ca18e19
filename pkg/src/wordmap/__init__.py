"""Exact word-map arithmetic on SL2/SLn: adjugate extensions, trace probes,
dual-number jet certificates for representation-variety components, and the
orthogonal-A1 root-system search."""

from .errors import (
    CentralConstant,
    DegenerateLambda,
    DimensionMismatch,
    EmptyInnerWord,
    InvalidParams,
    InvalidType,
    NotInvertible,
    RingLacksRoots,
    RingMismatch,
    UnboundConstant,
    WordSyntaxError,
    WordmapError,
    ZeroExponent,
)
from .rings import (
    DualNumbers,
    PrimeField,
    QuadraticExt,
    Rationals,
    RingDescriptor,
    Scalar,
    parse_ring,
    parse_scalar,
    primitive_root_of_unity,
    render_scalar,
    sqrt_in_ring,
    sqrt_minus_one,
)
from .matrices import (
    CharPolyCoeffs,
    SquareMatrix,
    adjugate,
    charpoly,
    det,
    is_central_sl2,
    is_special,
    is_unipotent,
    matrix_from_json,
    matrix_to_json,
    random_sl2,
    rank,
)
from .words import (
    ConstLetter,
    ExponentData,
    Letter,
    Word,
    WordWithConstants,
    commutator,
    concat,
    exponent_data,
    invert,
    parse,
    power,
    pure,
    reduce,
    render,
    render_word,
    word,
    zero_exponent_sum_in_y,
)
from .evaluate import (
    ChiProbeResult,
    EvalReport,
    ProbeVerdict,
    RestrictionCheck,
    check_restriction_identities,
    chi_probe,
    dominance_probe,
    eval_adjugate_extension,
    eval_group,
    eval_report,
    homogeneity_check,
    jet_sweep,
)
from .geometry import (
    COMPONENT_IDS,
    ComponentInstance,
    DimensionCertificate,
    FiberMembership,
    JetJacobian,
    Lemma78Report,
    Lemma101Report,
    RelationScanResult,
    Sl2Pair,
    TraceProbeResult,
    commutator_closed_form,
    commutator_trace,
    component,
    dimension_certificate,
    fiber_membership,
    generated_group,
    jet_jacobian,
    lemma78_check,
    lemma101_check,
    parametrization_rank,
    q8_witness,
    relation_scan,
    separation_witness,
    trace_preimage_commutator,
    wsigma_trace_probe,
)
from .rootsys import (
    RootSystem,
    StarResult,
    TableRow,
    build,
    expected_star,
    star_search,
    verify_lemma_table,
    verify_witness,
)

__version__ = "0.1.0"
