"""Durfee dissections, Rogers-Ramanujan type identities and their q-series."""

from .partitions import Partition, conjugate, enumerate_partitions, parse_partition
from .qseries import TruncatedSeries, poch, qbinom

__all__ = ["Partition", "TruncatedSeries", "conjugate", "enumerate_partitions",
           "parse_partition", "poch", "qbinom"]
__version__ = "0.1.0"
