"""Marked alphabet, P-matrices, biwords and the generalized RSK correspondence.

The alphabet is the chain 1' < 1 < 2' < 2 < ... ; primed letters are "marked".
Insertion uses BUMP (strict comparison) for unmarked letters and EQBUMP (weak
comparison) for marked letters, and the first row of the common shape of the
output pair equals the longest increasing subsequence length of the biword.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .partitions import Partition


@dataclass(frozen=True, order=False)
class Entry:
    """One letter k or k' of the marked alphabet."""

    value: int
    marked: bool = False

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("letter values start at 1")

    @property
    def key(self):
        # 1' -> 1, 1 -> 2, 2' -> 3, 2 -> 4, ...: encodes the chain order
        return 2 * self.value - (1 if self.marked else 0)

    def __lt__(self, other):
        return self.key < other.key

    def __le__(self, other):
        return self.key <= other.key

    def __str__(self):
        return f"{self.value}'" if self.marked else str(self.value)

    @classmethod
    def parse(cls, token):
        token = token.strip()
        if token.endswith("'"):
            return cls(int(token[:-1]), True)
        return cls(int(token), False)


class PMatrix:
    """Rectangular matrix over the marked alphabet plus 0 (stored as None)."""

    def __init__(self, entries):
        entries = [list(row) for row in entries]
        if not entries:
            raise ValueError("matrix needs at least one row")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise ValueError("ragged matrix")
        for row in entries:
            for e in row:
                if e is not None and not isinstance(e, Entry):
                    raise TypeError(f"bad entry {e!r}")
        self.entries = entries
        self.m = len(entries)
        self.n = width

    def abs_entry(self, i, j):
        e = self.entries[i][j]
        return 0 if e is None else e.value

    def row_type(self):
        return [sum(self.abs_entry(i, j) for j in range(self.n)) for i in range(self.m)]

    def col_type(self):
        return [sum(self.abs_entry(i, j) for i in range(self.m)) for j in range(self.n)]

    def mark(self):
        return sum(1 for row in self.entries for e in row if e is not None and e.marked)

    def __eq__(self, other):
        return isinstance(other, PMatrix) and self.entries == other.entries

    def to_text(self):
        return "\n".join(
            " ".join("0" if e is None else str(e) for e in row) for row in self.entries
        )

    @classmethod
    def from_text(cls, text):
        rows = []
        for lineno, line in enumerate(text.strip().splitlines(), start=1):
            row = []
            for colno, tok in enumerate(line.split(), start=1):
                if tok == "0":
                    row.append(None)
                else:
                    try:
                        row.append(Entry.parse(tok))
                    except ValueError as exc:
                        raise ValueError(
                            f"bad token {tok!r} at line {lineno}, column {colno}"
                        ) from exc
            rows.append(row)
        return cls(rows)

    def __repr__(self):
        return f"PMatrix({self.to_text()!r})"


class Biword:
    """Two-line array: weakly increasing uppers over marked-alphabet lowers."""

    def __init__(self, pairs):
        self.pairs = [(int(u), low) for (u, low) in pairs]
        for _, low in self.pairs:
            if not isinstance(low, Entry):
                raise TypeError("lower line must consist of alphabet letters")

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __eq__(self, other):
        return isinstance(other, Biword) and self.pairs == other.pairs

    def uppers(self):
        return [u for u, _ in self.pairs]

    def lowers(self):
        return [a for _, a in self.pairs]

    def __repr__(self):
        up = " ".join(str(u) for u, _ in self.pairs)
        lo = " ".join(str(a) for _, a in self.pairs)
        return f"Biword({up} / {lo})"


class MarkedTableau:
    """Filling of a Young diagram by the marked alphabet obeying T1 and T2."""

    def __init__(self, rows=()):
        self.rows = [list(r) for r in rows]

    def shape(self):
        return Partition([len(r) for r in self.rows])

    def type(self):
        counts = {}
        for row in self.rows:
            for e in row:
                counts[e.value] = counts.get(e.value, 0) + 1
        if not counts:
            return []
        return [counts.get(k, 0) for k in range(1, max(counts) + 1)]

    def mark(self):
        return sum(1 for row in self.rows for e in row if e.marked)

    def copy(self):
        return MarkedTableau([list(r) for r in self.rows])

    def __eq__(self, other):
        return isinstance(other, MarkedTableau) and self.rows == other.rows

    def __repr__(self):
        return "MarkedTableau[" + "; ".join(" ".join(map(str, r)) for r in self.rows) + "]"


class RecordingTableau:
    """Semistandard tableau over the positive integers."""

    def __init__(self, rows=()):
        self.rows = [list(map(int, r)) for r in rows]

    def shape(self):
        return Partition([len(r) for r in self.rows])

    def type(self):
        counts = {}
        for row in self.rows:
            for v in row:
                counts[v] = counts.get(v, 0) + 1
        if not counts:
            return []
        return [counts.get(k, 0) for k in range(1, max(counts) + 1)]

    def copy(self):
        return RecordingTableau([list(r) for r in self.rows])

    def __eq__(self, other):
        return isinstance(other, RecordingTableau) and self.rows == other.rows

    def __repr__(self):
        return "RecordingTableau[" + "; ".join(" ".join(map(str, r)) for r in self.rows) + "]"


def validate_marked_tableau(t):
    """True iff the filling satisfies T1 (monotone rows/columns) and T2."""
    rows = t.rows
    lengths = [len(r) for r in rows]
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        return False
    for r, row in enumerate(rows):
        for c, e in enumerate(row):
            if c + 1 < len(row) and row[c + 1].key < e.key:
                return False
            if r + 1 < len(rows) and c < len(rows[r + 1]) and rows[r + 1][c].key < e.key:
                return False
    # T2: at most one marked k' per row, at most one unmarked k per column
    for row in rows:
        seen = set()
        for e in row:
            if e.marked:
                if e.value in seen:
                    return False
                seen.add(e.value)
    ncols = lengths[0] if lengths else 0
    for c in range(ncols):
        seen = set()
        for r in range(len(rows)):
            if c < len(rows[r]):
                e = rows[r][c]
                if not e.marked:
                    if e.value in seen:
                        return False
                    seen.add(e.value)
    return True


def validate_recording_tableau(t):
    rows = t.rows
    lengths = [len(r) for r in rows]
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        return False
    for r, row in enumerate(rows):
        for c, v in enumerate(row):
            if v < 1:
                return False
            if c + 1 < len(row) and row[c + 1] < v:
                return False
            if r + 1 < len(rows) and c < len(rows[r + 1]) and rows[r + 1][c] <= v:
                return False
    return True


def validate_biword(w):
    """Check the upper-line ordering, block conditions and the marking rule."""
    pairs = w.pairs
    for k in range(len(pairs) - 1):
        (u1, a1), (u2, a2) = pairs[k], pairs[k + 1]
        if u1 > u2:
            return False
        if u1 == u2:
            ok = a1.key < a2.key or (a1 == a2 and not a1.marked)
            if not ok:
                return False
    # within a fixed (upper, |lower|) group only the first letter may be marked
    seen_group = set()
    for u, a in pairs:
        group = (u, a.value)
        if a.marked:
            if group in seen_group:
                return False
        seen_group.add(group)
    return True


def biword_from_matrix(a):
    """Read the matrix row-major: (i,j) repeated |a_ij| times, first copy marked."""
    pairs = []
    for i in range(a.m):
        for j in range(a.n):
            e = a.entries[i][j]
            if e is None:
                continue
            pairs.append((i + 1, Entry(j + 1, e.marked)))
            for _ in range(e.value - 1):
                pairs.append((i + 1, Entry(j + 1, False)))
    return Biword(pairs)


def matrix_from_biword(w, m, n):
    """Inverse of biword_from_matrix; rejects words outside the valid image."""
    if not validate_biword(w):
        raise ValueError("invalid biword")
    counts = {}
    marked = {}
    for u, a in w.pairs:
        if u > m or a.value > n:
            raise ValueError("biword letter exceeds matrix dimensions")
        key = (u, a.value)
        counts[key] = counts.get(key, 0) + 1
        if a.marked:
            marked[key] = True
    entries = [[None] * n for _ in range(m)]
    for (i, j), cnt in counts.items():
        entries[i - 1][j - 1] = Entry(cnt, marked.get((i, j), False))
    # entry magnitude is the multiplicity, with the group's mark if any
    out = PMatrix(entries)
    return out


def _row_keys(row):
    return [e.key for e in row]


def insert(tableau, alpha):
    """Insert one letter; returns (new tableau, (row, col)) of the added cell."""
    t = tableau.copy()
    rows = t.rows
    r = 0
    cur = alpha
    while True:
        if r == len(rows):
            rows.append([cur])
            return t, (r, 0)
        keys = _row_keys(rows[r])
        if cur.marked:
            pos = bisect_left(keys, cur.key)   # EQBUMP: smallest element >= alpha
        else:
            pos = bisect_right(keys, cur.key)  # BUMP: smallest element > alpha
        if pos == len(keys):
            rows[r].append(cur)
            return t, (r, pos)
        cur, rows[r][pos] = rows[r][pos], cur
        r += 1


def rsk(a):
    """Generalized RSK: P-matrix -> (insertion tableau, recording tableau)."""
    s = MarkedTableau()
    u = RecordingTableau()
    for upper, lower in biword_from_matrix(a):
        s, (r, c) = insert(s, lower)
        if r == len(u.rows):
            u.rows.append([upper])
        else:
            u.rows[r].append(upper)
    return s, u


class InverseRSKError(ValueError):
    """Raised when a tableau pair is not in the image of rsk."""


def _reverse_insert(rows, start_row):
    """Undo the insertion whose cascade ended by appending in `start_row`.

    Removes the last cell of that row and walks back up; returns the letter
    that was originally inserted into row 0.
    """
    gamma = rows[start_row].pop()
    if not rows[start_row]:
        rows.pop()
    for r in range(start_row - 1, -1, -1):
        row = rows[r]
        pos = None
        for idx in range(len(row) - 1, -1, -1):
            e = row[idx]
            if e.key < gamma.key or (e == gamma and e.marked):
                pos = idx
                break
        if pos is None:
            raise InverseRSKError("no reverse bump candidate; pair not in the image")
        gamma, row[pos] = row[pos], gamma
    return gamma


def inverse_rsk(s, u, m=None, n=None):
    """Rebuild the P-matrix from a tableau pair of equal shape.

    Reverse insertions run in decreasing recording value, ties right-to-left.
    """
    if s.shape() != u.shape():
        raise InverseRSKError("shape mismatch")
    if not validate_marked_tableau(s):
        raise InverseRSKError("invalid marked tableau")
    if not validate_recording_tableau(u):
        raise InverseRSKError("invalid recording tableau")
    cells = [(u.rows[r][c], c, r) for r in range(len(u.rows)) for c in range(len(u.rows[r]))]
    cells.sort(reverse=True)  # by (value, column) descending
    rows = [list(r) for r in s.rows]
    pairs = []
    for value, c, r in cells:
        # the cell being removed must currently be the last of its row
        if r >= len(rows) or len(rows[r]) != c + 1:
            raise InverseRSKError("recording entries do not peel off corners")
        alpha = _reverse_insert(rows, r)
        pairs.append((value, alpha))
    pairs.reverse()
    w = Biword(pairs)
    if m is None:
        m = max((up for up, _ in pairs), default=1)
    if n is None:
        n = max((a.value for _, a in pairs), default=1)
    return matrix_from_biword(w, m, n)


def _lis_keys(key_marked_seq):
    """Patience-sorting LIS on (key, marked) letters.

    A letter may follow a weakly smaller one, except that equal marked letters
    cannot repeat: unmarked letters extend ties (bisect_right), marked ones do
    not (bisect_left).
    """
    tails = []
    for key, marked in key_marked_seq:
        pos = bisect_left(tails, key) if marked else bisect_right(tails, key)
        if pos == len(tails):
            tails.append(key)
        else:
            tails[pos] = key
    return len(tails)


def longest_increasing(w):
    """Length of the longest increasing subsequence of the lower line."""
    return _lis_keys((a.key, a.marked) for _, a in w.pairs)
