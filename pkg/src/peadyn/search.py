"""Exhaustive fixed point and cycle enumeration.

Fixed points are searched in description space rather than word space: a fixed
point renders its own description, which forces the count identity
sum(c_j) == sum(digit_length(c_j) + 1) and keeps every count within a few
units of the block count. Cycle search seeds orbits from image words only,
because a cycle element is always the image of its predecessor in the cycle.
A plain word-by-word classifier doubles as the completeness oracle for small
bases; it applies no pruning at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .core import Block, Description, Word, _numeral_digits, _step, check_base, describe, digit_length, render
from .dynamics import DEFAULT_MAX_STEPS, OrbitLimitExceeded, length_bound

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """The requested search is larger than the configured candidate budget."""


@dataclass(frozen=True)
class CycleRecord:
    """A period-p cycle, rotated so the smallest word comes first.

    Words compare by letter sequence, then length (plain tuple order), which
    makes the rotation canonical: two discoveries of the same cycle always
    produce equal records.
    """

    base: int
    period: int
    words: tuple[Word, ...]

    def __post_init__(self) -> None:
        check_base(self.base)
        if self.period < 1 or self.period != len(self.words):
            raise ValueError("period must match the number of words")
        if len(set(self.words)) != self.period:
            raise ValueError("cycle words must be distinct")
        if min(self.words) != self.words[0]:
            raise ValueError("cycle must start at its smallest word")

    def closes_under_step(self) -> bool:
        return all(
            _step(self.words[i], self.base) == self.words[(i + 1) % self.period]
            for i in range(self.period)
        )


@dataclass(frozen=True)
class ClassificationReport:
    """Everything one search found: fixed points plus period >= 2 cycles.

    ``method`` records how the result was obtained: "description-search" for
    the pruned searches, "exhaustive" for the word-by-word oracle.
    """

    base: int
    fixed_points: tuple[Word, ...]
    cycles: tuple[CycleRecord, ...]
    search_length_limit: int
    method: str


def word_sort_key(word: Word) -> tuple[int, Word]:
    """Shortest first, then lexicographic; the output order everywhere."""
    return (len(word), word)


def cycle_sort_key(record: CycleRecord) -> tuple[int, Word]:
    return (record.period, record.words[0])


def canonical_cycle(words: tuple[Word, ...], base: int) -> CycleRecord:
    """Build a CycleRecord rotated so the smallest word leads."""
    pivot = words.index(min(words))
    return CycleRecord(base=base, period=len(words), words=words[pivot:] + words[:pivot])


def fixed_point_inequality_holds(description: Description) -> bool:
    """Necessary, not sufficient, condition on a fixed point's description.

    With n_j one less than the digit count of block j's numeral, a word that
    renders its own description must satisfy

        sum(n_j) >= sum(k^n_j) - 2r

    since every count is at least k^n_j yet all counts together only measure
    the word's own length, which is sum(n_j) + 2r.
    """
    k = description.base
    total_n = 0
    total_pow = 0
    for count, _ in description.blocks:
        n = digit_length(count, k) - 1
        total_n += n
        total_pow += k**n
    return total_n >= total_pow - 2 * len(description.blocks)


def cycle_inequality_holds(record: CycleRecord) -> bool:
    """Cycle analogue of the fixed point inequality, summed over all words.

    Block counts may differ from word to word, so the slack term uses each
    word's own block count: sum over words of (n sums) >= sum of k^n minus
    2 * (total blocks across the cycle).
    """
    k = record.base
    total_n = 0
    total_pow = 0
    total_blocks = 0
    for word in record.words:
        d = describe(word, k)
        total_blocks += len(d.blocks)
        for count, _ in d.blocks:
            n = digit_length(count, k) - 1
            total_n += n
            total_pow += k**n
    return total_n >= total_pow - 2 * total_blocks


def _self_consistent_count_tuples(r: int, base: int, limit: int, max_tuples: int) -> list[tuple[int, ...]]:
    """Count tuples (c_1..c_r) with sum(c) == sum(digit_length(c) + 1) <= limit.

    weight(c) = c - digit_length(c) - 1 is nondecreasing in c and never below
    -1, so once a prefix weight exceeds the number of slots left it can never
    balance back to zero and larger counts only make it worse. Raises
    BudgetExceeded after max_tuples solutions.
    """
    out: list[tuple[int, ...]] = []
    prefix = [0] * r

    def extend(pos: int, csum: int, diff: int) -> None:
        slots = r - pos
        if slots == 0:
            if diff == 0:
                if len(out) >= max_tuples:
                    raise BudgetExceeded(
                        f"fixed point search in base {base} exceeds the candidate budget"
                    )
                out.append(tuple(prefix))
            return
        cap = limit - csum - (slots - 1)
        for c in range(1, cap + 1):
            w = c - digit_length(c, base) - 1
            if diff + w > slots - 1:
                break
            prefix[pos] = c
            extend(pos + 1, csum + c, diff + w)

    extend(0, 0, 0)
    return out


def enumerate_fixed_points(base: int, length_limit: int | None = None, *, budget: int | None = None) -> set[Word]:
    """Every nonempty word that describes itself, as a set of words.

    Complete for the default length limit (the eventual orbit length cap):
    any fixed point recurs forever, so its length fits under the cap and its
    description counts sum to its own length. Candidates come from
    description space, so the search touches thousands of words, not
    base**length. The budget caps generated candidates and guards against
    large-base blowup.
    """
    check_base(base)
    limit = length_bound(base).length_bound if length_limit is None else length_limit
    if limit < 1:
        raise ValueError(f"length limit must be positive, got {limit}")
    remaining = DEFAULT_BUDGET if budget is None else budget
    found: set[Word] = set()
    for r in range(1, min(base, limit // 2) + 1):
        letter_sets = comb(base, r)
        tuples_r = _self_consistent_count_tuples(r, base, limit, remaining // letter_sets)
        if not tuples_r:
            continue
        remaining -= len(tuples_r) * letter_sets
        for letters in combinations(range(base - 1, -1, -1), r):
            for counts in tuples_r:
                candidate = Description(tuple(map(Block, counts, letters)), base)
                if not fixed_point_inequality_holds(candidate):
                    continue
                word = render(candidate)
                tally = [0] * base
                for letter in word:
                    tally[letter] += 1
                # the count identity pins len(word) == sum(counts), so matching
                # every block count leaves no room for stray letters
                if all(tally[b] == c for c, b in candidate.blocks):
                    found.add(word)
    return found


def _compositions_capped(r: int, total: int):
    """Yield every r-tuple of positive integers with sum <= total."""
    prefix = [0] * r

    def extend(pos: int, left: int):
        slots = r - pos
        if slots == 0:
            yield tuple(prefix)
            return
        for c in range(1, left - (slots - 1) + 1):
            prefix[pos] = c
            yield from extend(pos + 1, left - c)

    yield from extend(0, total)


def _resolve_terminal(
    word: Word,
    base: int,
    memo: dict[Word, int],
    registry: list[CycleRecord],
    max_steps: int,
) -> int:
    """Cycle id of the orbit terminal from ``word``, caching every word seen.

    New cycles are appended to ``registry``; a cycle already in the registry
    is always hit through ``memo`` first, so no duplicates arise.
    """
    cid = memo.get(word)
    if cid is not None:
        return cid
    path = [word]
    first = {word: 0}
    current = word
    while True:
        current = _step(current, base)
        cid = memo.get(current)
        if cid is not None:
            break
        j = first.get(current)
        if j is not None:
            registry.append(canonical_cycle(tuple(path[j:]), base))
            cid = len(registry) - 1
            break
        if len(path) >= max_steps:
            raise OrbitLimitExceeded(f"no repeat within {max_steps} steps during search")
        first[current] = len(path)
        path.append(current)
    for w in path:
        memo[w] = cid
    return cid


def enumerate_cycles(
    base: int,
    length_limit: int | None = None,
    *,
    max_steps: int = DEFAULT_MAX_STEPS,
    budget: int | None = None,
) -> set[CycleRecord]:
    """All cycles of period >= 2 whose words fit within the length limit.

    Seeds every image of a word of length <= limit, i.e. renders every
    description whose counts sum to at most the limit. A cycle word is the
    image of its predecessor in the cycle and that predecessor obeys the same
    cap, so the search starts inside every qualifying cycle rather than
    having to reach it. Orbits share one terminal cache, so overlapping
    basins cost a single traversal.
    """
    check_base(base)
    limit = length_bound(base).length_bound if length_limit is None else length_limit
    if limit < 2:
        raise ValueError(f"cycle search needs a length limit of at least 2, got {limit}")
    allowed = DEFAULT_BUDGET if budget is None else budget
    total_seeds = sum(comb(base, r) * comb(limit, r) for r in range(1, min(base, limit) + 1))
    if total_seeds > allowed:
        raise BudgetExceeded(
            f"cycle search in base {base} needs {total_seeds} seeds, budget is {allowed}"
        )
    memo: dict[Word, int] = {}
    registry: list[CycleRecord] = []
    for r in range(1, min(base, limit) + 1):
        for letters in combinations(range(base - 1, -1, -1), r):
            for counts in _compositions_capped(r, limit):
                seed: list[int] = []
                for c, b in zip(counts, letters):
                    seed.extend(_numeral_digits(c, base))
                    seed.append(b)
                _resolve_terminal(tuple(seed), base, memo, registry, max_steps)
    return {record for record in registry if record.period >= 2}


def classify(
    base: int,
    length_limit: int | None = None,
    *,
    max_steps: int = DEFAULT_MAX_STEPS,
    budget: int | None = None,
) -> ClassificationReport:
    """Report from the pruned description searches, deterministically ordered."""
    limit = length_bound(base).length_bound if length_limit is None else length_limit
    fixed = enumerate_fixed_points(base, limit, budget=budget)
    cycles = enumerate_cycles(base, limit, max_steps=max_steps, budget=budget)
    return ClassificationReport(
        base=base,
        fixed_points=tuple(sorted(fixed, key=word_sort_key)),
        cycles=tuple(sorted(cycles, key=cycle_sort_key)),
        search_length_limit=limit,
        method="description-search",
    )


def brute_force_classify(
    base: int,
    max_len: int,
    *,
    budget: int | None = None,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> ClassificationReport:
    """Classify by visiting every nonempty word up to max_len, no pruning.

    The completeness oracle for the description searches: slow but assumption
    free. Fixed points come from a direct step(w) == w test on every word;
    cycles are the terminals of every orbit, resolved through a shared cache
    that keeps the sweep close to linear in the number of words.
    """
    check_base(base)
    if max_len < 1:
        raise ValueError(f"max_len must be positive, got {max_len}")
    allowed = DEFAULT_BUDGET if budget is None else budget
    total = (base ** (max_len + 1) - base) // (base - 1)
    if total > allowed:
        raise BudgetExceeded(f"{total} words of length <= {max_len}, budget is {allowed}")
    fixed: list[Word] = []
    memo: dict[Word, int] = {}
    registry: list[CycleRecord] = []
    resolve = _resolve_terminal
    step_ = _step
    for n in range(1, max_len + 1):
        for word in product(range(base), repeat=n):
            image = step_(word, base)
            if image == word:
                fixed.append(word)
            if image not in memo:
                resolve(image, base, memo, registry, max_steps)
    cycles = sorted((rec for rec in registry if rec.period >= 2), key=cycle_sort_key)
    return ClassificationReport(
        base=base,
        fixed_points=tuple(sorted(fixed, key=word_sort_key)),
        cycles=tuple(cycles),
        search_length_limit=max_len,
        method="exhaustive",
    )


def verify_base2_convergence(max_len: int, *, max_steps: int = DEFAULT_MAX_STEPS) -> bool:
    """Check that every nonempty binary word up to max_len falls into 1001110.

    The lone exception is 111, which is a fixed point of its own. Returns
    False as soon as any word lands anywhere else.
    """
    if max_len < 1:
        raise ValueError(f"max_len must be positive, got {max_len}")
    sink = (1, 0, 0, 1, 1, 1, 0)
    exception = (1, 1, 1)
    memo: dict[Word, int] = {}
    registry: list[CycleRecord] = []
    for n in range(1, max_len + 1):
        for word in product((0, 1), repeat=n):
            cid = _resolve_terminal(word, 2, memo, registry, max_steps)
            target = exception if word == exception else sink
            if registry[cid].words != (target,):
                return False
    return True
