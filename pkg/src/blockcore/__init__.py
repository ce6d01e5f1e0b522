"""p-block combinatorics of symmetric and alternating groups and their double covers."""

from .partitions import BarPartition, CoreQuotient, Partition

__all__ = ["BarPartition", "CoreQuotient", "Partition"]
__version__ = "0.1.0"
