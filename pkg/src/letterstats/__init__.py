"""Letter-frequency statistics for categorized English text.

Count letters, build category standards, classify documents by distance to
those standards, produce reduced passages, and test group differences with
rank-based statistics.
"""

from ._kernel import KERNEL_BACKEND
from .classifier import BatchResult, DistanceReport, classify, classify_batch, distance
from .corpus import (
    CorpusManifest,
    Document,
    load_corpus,
    load_document,
    load_manifest,
    strip_boilerplate,
)
from .histogram import (
    ALPHABET,
    FrequencyVector,
    LetterHistogram,
    count_letters,
    to_frequency,
)
from .reducer import (
    ReducedPassage,
    ReductionPlan,
    reduce_least_common,
    reduce_random,
    reduction_summary,
)
from .standards import (
    CategoryStandard,
    RankedDistribution,
    RemovalSet,
    build_standard,
    derive_removal_set,
    emit_distribution_report,
    rank,
    read_standard,
    write_standard,
)
from .stats import (
    KruskalWallisResult,
    PairwiseComparison,
    chi_square_sf,
    dunn_pairwise,
    kruskal_wallis,
    normal_sf,
    sidak_adjust,
)

__version__ = "0.1.0"
