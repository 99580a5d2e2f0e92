"""
Data Models - Define the structure of all data objects
"""

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Optional

from core.errors import ConfigError


class ThresholdSide(Enum):
    """Which side of an irrational threshold a fractional part falls on."""
    ABOVE = "Above"
    BELOW = "Below"


class CountConvention(Enum):
    """How a prime-count table bounds the x range."""
    VALUE = "value"   # x >= 1 and poly(x) <= B
    INDEX = "index"   # 1 <= x <= isqrt(B), poly(x) may exceed B


class PolyFamily(Enum):
    """
    The quadratic forms x^2 + a*x + c that show up in the genus 2 and 3 tests.

    Each member carries its label, the linear and constant coefficients,
    and the counting convention of the published table it belongs to.
    """
    X2P1 = ("x2+1", 0, 1, CountConvention.VALUE)
    X2PXP1 = ("x2+x+1", 1, 1, CountConvention.VALUE)
    X2PXP2 = ("x2+x+2", 1, 2, CountConvention.VALUE)
    X2P2 = ("x2+2", 0, 2, CountConvention.INDEX)
    X2PXP3 = ("x2+x+3", 1, 3, CountConvention.INDEX)

    def __init__(self, label: str, linear: int, constant: int, convention: CountConvention):
        self.label = label
        self.linear = linear
        self.constant = constant
        self.convention = convention

    @classmethod
    def from_label(cls, label: str) -> "PolyFamily":
        """Look a family up by its label ("x2+x+1"); '^' and spaces are ignored."""
        cleaned = label.replace(" ", "").replace("^", "").lower()
        for family in cls:
            if family.label == cleaned:
                return family
        raise ConfigError(f"Unknown polynomial family: {label}")

    @property
    def discriminant(self) -> int:
        """a^2 - 4c."""
        return self.linear * self.linear - 4 * self.constant

    @property
    def sievable(self) -> bool:
        """x^2+x+2 is always even, so there is nothing to count."""
        return self is not PolyFamily.X2PXP2

    @property
    def display(self) -> str:
        """Human-readable form, e.g. x²+x+1."""
        return self.label.replace("x2", "x²")

    def evaluate(self, x: int) -> int:
        """poly(x)."""
        return x * x + self.linear * x + self.constant


@dataclass(frozen=True)
class PrimePower:
    """A prime power q = p^e. Primality of p is checked by the callers."""
    p: int
    e: int
    q: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.p < 2 or self.e < 1:
            raise ValueError(f"Not a prime power exponent pair: ({self.p}, {self.e})")
        object.__setattr__(self, "q", self.p ** self.e)

    @property
    def is_square(self) -> bool:
        """q is a perfect square exactly when e is even."""
        return self.e % 2 == 0

    @property
    def label(self) -> str:
        """Published notation, e.g. 7^5."""
        return f"{self.p}^{self.e}"


@dataclass
class DWRecord:
    """A Deuring-Waterhouse number with its genus 2 and genus 3 classification."""
    pp: PrimePower
    m: int
    genus2: "Genus2Result"
    genus3: "Genus3Result"

    @property
    def q(self) -> int:
        return self.pp.q

    @property
    def genus2_defect(self) -> int:
        return self.genus2.defect

    @property
    def genus3_mrd(self) -> int:
        return self.genus3.mrd


@dataclass
class SearchCheckpoint:
    """Resumable progress of a range search; segments are block indices."""
    range_lo: int
    range_hi: int
    exponent: int
    segment_size: int
    completed_segments: set[int] = field(default_factory=set)
    hits: list[PrimePower] = field(default_factory=list)

    def matches(self, lo: int, hi: int, exponent: int, segment_size: int) -> bool:
        """True if this checkpoint belongs to the given search."""
        return (
            self.range_lo == lo
            and self.range_hi == hi
            and self.exponent == exponent
            and self.segment_size == segment_size
        )


@dataclass
class CountRow:
    """One row of a prime-count table."""
    family: PolyFamily
    bound: int
    count: int


class Genus2Reason(Enum):
    """Why a genus 2 defect takes its value."""
    NONSPECIAL = "Nonspecial"
    SQUARE_EXCEPTION = "SquareException"
    SPECIAL_DIVIDES_M = "SpecialDividesM"
    SPECIAL_POLY_REP = "SpecialPolyRep"


@dataclass
class Genus2Result:
    """Genus 2 defect of q and the condition that triggered it."""
    defect: int
    reason: Genus2Reason
    family: Optional[PolyFamily] = None
    threshold_side: Optional[ThresholdSide] = None
    q: int = 0

    @property
    def reason_label(self) -> str:
        if self.reason is Genus2Reason.SPECIAL_POLY_REP and self.family is not None:
            return f"{self.reason.value}({self.family.label})"
        if self.reason is Genus2Reason.SQUARE_EXCEPTION:
            return f"{self.reason.value}({self.q})"
        if self.reason is Genus2Reason.SPECIAL_DIVIDES_M and self.threshold_side is not None:
            return f"{self.reason.value}({self.threshold_side.value})"
        return self.reason.value


class Genus3Reason(Enum):
    """Which clause set the genus 3 minimal relative defect."""
    NONE = "None"
    X2R = "X2R"
    X2XR = "X2XR"
    DIVIDES_M = "DividesM"


@dataclass
class Genus3Result:
    """
    Genus 3 minimal relative defect of a non-square q.

    `fired` lists every clause that applied, in clause order; `reason`
    is the one that produced the minimum.
    """
    mrd: int
    reason: Genus3Reason
    r: Optional[int] = None
    threshold_side: Optional[ThresholdSide] = None
    fired: tuple[str, ...] = ()

    @property
    def reason_label(self) -> str:
        if self.reason in (Genus3Reason.X2R, Genus3Reason.X2XR):
            return f"{self.reason.value}(r={self.r})"
        if self.reason is Genus3Reason.DIVIDES_M and self.threshold_side is not None:
            return f"{self.reason.value}({self.threshold_side.value})"
        return self.reason.value


@dataclass
class ClassificationSummary:
    """Aggregate defect counts over a list of DW numbers."""
    defect1_count: int = 0
    defect2_count: int = 0
    mrd2_count: int = 0
    mrd3_count: int = 0

    @property
    def total(self) -> int:
        return self.defect1_count + self.defect2_count


@dataclass
class HeuristicEstimate:
    """The log log estimate over (lo, hi), optionally with the exact sum."""
    lo: int
    hi: int
    loglog_value: float
    reciprocal_sum: Optional[float] = None


@dataclass
class ExperimentResult:
    """DW pairs over a prime range and an exponent range, counted two ways."""
    p_lo: int
    p_hi: int
    e_lo: int
    e_hi: int
    direct_count: int
    digit_count: int
    expected: float

    @property
    def exponent_count(self) -> int:
        """Number of odd exponents in [e_lo, e_hi)."""
        first = self.e_lo if self.e_lo % 2 else self.e_lo + 1
        return max(0, (self.e_hi - first + 1) // 2)

    @property
    def relative_gap(self) -> float:
        """|observed - expected| / expected."""
        if self.expected == 0:
            return 0.0
        return abs(self.direct_count - self.expected) / self.expected


class Subcommand(Enum):
    SERRE = "serre"
    DW_ENUM = "dw-enum"
    POLYSIEVE = "polysieve"
    CLASSIFY = "classify"
    HEURISTIC = "heuristic"
    TABLES = "tables"
    VERIFY = "verify"
    GUI = "gui"


class OutputFormat(Enum):
    CSV = "csv"
    JSONL = "jsonl"
    TEXT = "text"


@dataclass
class RunConfig:
    """
    Everything one CLI invocation needs.

    Only the fields relevant to `subcommand` are read; validate() checks
    them before any computation starts.
    """
    subcommand: Subcommand
    parallelism: int = 1
    output_format: OutputFormat = OutputFormat.TEXT
    checkpoint_path: Optional[Path] = None
    progress: bool = False

    # serre
    range_lo: int = 1
    range_hi: int = 0
    exponent: int = 5

    # dw-enum / polysieve
    bound: int = 0
    family: Optional[PolyFamily] = None
    emit_x_path: Optional[Path] = None

    # classify
    input_path: Optional[Path] = None
    q_value: Optional[str] = None

    # heuristic
    count: int = 146
    threshold_name: str = "golden"
    exact_sum: bool = False

    # tables
    table: int = 1
    max_bound: int = 0
    ratio: bool = False
    xlsx_path: Optional[Path] = None

    # verify
    fixture_path: Optional[Path] = None
    details: bool = False

    def validate(self):
        """Raise ConfigError for anything that cannot be run."""
        if self.parallelism < 1:
            raise ConfigError("--threads must be at least 1")

        cmd = self.subcommand
        if cmd is Subcommand.SERRE:
            if self.range_hi <= self.range_lo:
                raise ConfigError("--max must exceed --min")
            if self.exponent < 5 or self.exponent % 2 == 0:
                raise ConfigError("--exp must be odd and at least 5")
        elif cmd is Subcommand.DW_ENUM:
            if self.bound < 2:
                raise ConfigError("--bound must be at least 2")
        elif cmd is Subcommand.POLYSIEVE:
            if self.family is None:
                raise ConfigError("--family is required")
            if not self.family.sievable:
                raise ConfigError("x2+x+2 is always even; there are no primes to count")
            if self.bound < 10:
                raise ConfigError("--bound must be at least 10")
        elif cmd is Subcommand.CLASSIFY:
            if (self.input_path is None) == (self.q_value is None):
                raise ConfigError("classify needs exactly one of --input or --q")
            if self.output_format is OutputFormat.TEXT:
                self.output_format = OutputFormat.CSV
        elif cmd is Subcommand.HEURISTIC:
            if self.range_hi <= self.range_lo:
                raise ConfigError("--to must exceed --from")
            if self.threshold_name not in ("golden", "tau"):
                raise ConfigError("--threshold must be golden or tau")
            if self.count < 0:
                raise ConfigError("--count must be non-negative")
        elif cmd is Subcommand.TABLES:
            if self.table not in (1, 2):
                raise ConfigError("--table must be 1 or 2")
            if self.max_bound < 10:
                raise ConfigError("--max-bound must be at least 10")
            if self.ratio and self.table != 1:
                raise ConfigError("--ratio applies to table 1 only")

        for path in (self.checkpoint_path, self.emit_x_path, self.xlsx_path):
            if path is not None and not Path(path).parent.exists():
                raise ConfigError(f"Directory does not exist for output path: {path}")
