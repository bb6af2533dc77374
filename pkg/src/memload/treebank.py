"""Read, validate, and normalize constituency and dependency treebanks.

Constituency input is bracketed text in the Penn Treebank style; dependency
input is a minimal tab-separated format, one unit per line with blank lines
between sentences.  Both readers build immutable sentence structures for the
metric modules, and both can either raise on the first malformed sentence or
hand each error to a callback and skip the sentence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple, Sequence

__all__ = [
    "TreebankError",
    "PtbParseError",
    "UnbalancedBrackets",
    "EmptyTree",
    "LeafWithoutLabel",
    "EmptyAfterNormalization",
    "DepFormatError",
    "MalformedLine",
    "NonContiguousIndices",
    "MultipleRoots",
    "MissingRoot",
    "SelfHead",
    "HeadOutOfRange",
    "ConstituencyTree",
    "DependencyUnit",
    "DependencySentence",
    "NormalizationOptions",
    "PUNCTUATION_LABELS",
    "TRACE_LABEL",
    "parse_ptb_corpus",
    "parse_dep_corpus",
    "normalize_label",
    "normalize_tree",
]


class TreebankError(ValueError):
    """Base class for treebank reading and validation errors."""


class PtbParseError(TreebankError):
    """Malformed bracketed input; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnbalancedBrackets(PtbParseError):
    """An opening bracket is never closed, or a closing bracket has no match."""


class EmptyTree(PtbParseError):
    """A bracketed node with no children, such as () or (X)."""


class LeafWithoutLabel(PtbParseError):
    """A surface token found where a labeled tree was required."""


class EmptyAfterNormalization(TreebankError):
    """Normalization removed every leaf; the sentence has no content left."""


class DepFormatError(TreebankError):
    """Base class for dependency input errors."""


class MalformedLine(DepFormatError):
    """A dependency line that does not parse; carries the 1-based line number."""

    def __init__(self, message: str, line_no: int) -> None:
        super().__init__(f"{message} (line {line_no})")
        self.line_no = line_no


class NonContiguousIndices(DepFormatError):
    """Unit indices of a sentence are not exactly 1..n in order."""


class MultipleRoots(DepFormatError):
    """More than one unit has head 0."""


class MissingRoot(DepFormatError):
    """No unit has head 0."""


class SelfHead(DepFormatError):
    """A unit names itself as its head."""


class HeadOutOfRange(DepFormatError):
    """A head index falls outside 0..n."""


@dataclass(frozen=True)
class ConstituencyTree:
    """Ordered labeled tree.

    Internal nodes carry a category label and at least one child; leaves
    carry a surface form and nothing else.
    """

    label: str = ""
    children: tuple[ConstituencyTree, ...] = ()
    surface: str = ""

    def __post_init__(self) -> None:
        if self.children:
            if not self.label:
                raise ValueError("internal node requires a label")
            if self.surface:
                raise ValueError("internal node cannot carry a surface form")
        elif not self.surface:
            raise ValueError("leaf requires a surface form")

    @classmethod
    def phrase(cls, label: str, children: Sequence[ConstituencyTree]) -> ConstituencyTree:
        return cls(label=label, children=tuple(children))

    @classmethod
    def word(cls, surface: str) -> ConstituencyTree:
        return cls(surface=surface)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def leaves(self) -> Iterator[ConstituencyTree]:
        if self.is_leaf:
            yield self
        else:
            for child in self.children:
                yield from child.leaves()

    def to_bracketed(self) -> str:
        if self.is_leaf:
            return self.surface
        inner = " ".join(child.to_bracketed() for child in self.children)
        return f"({self.label} {inner})"


class _Token(NamedTuple):
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(r"[()]|[^()\s]+")


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        for match in _TOKEN_RE.finditer(line):
            tokens.append(_Token(match.group(), line_no, match.start() + 1))
    return tokens


def _toplevel_groups(
    tokens: list[_Token],
) -> Iterator[tuple[list[_Token], PtbParseError | None]]:
    """Split the token stream into balanced top-level groups.

    A stray closing bracket, an unclosed opening bracket, or a bare word at
    the top level forms a one-off group carrying its error, so one bad
    sentence cannot poison the rest of the file.
    """
    i, n = 0, len(tokens)
    while i < n:
        tok = tokens[i]
        if tok.text == "(":
            depth, j = 0, i
            while j < n:
                text = tokens[j].text
                if text == "(":
                    depth += 1
                elif text == ")":
                    depth -= 1
                    if depth == 0:
                        break
                j += 1
            if depth == 0:
                yield tokens[i : j + 1], None
                i = j + 1
            else:
                yield tokens[i:], UnbalancedBrackets(
                    "unclosed '('", tok.line, tok.column
                )
                i = n
        elif tok.text == ")":
            yield [tok], UnbalancedBrackets("unmatched ')'", tok.line, tok.column)
            i += 1
        else:
            yield [tok], LeafWithoutLabel(
                f"surface token {tok.text!r} outside any tree", tok.line, tok.column
            )
            i += 1


def _parse_node(tokens: list[_Token], i: int) -> tuple[ConstituencyTree, int]:
    # tokens[i] is the opening bracket; the group is known to be balanced.
    open_tok = tokens[i]
    head = tokens[i + 1]
    if head.text == ")":
        raise EmptyTree("empty node", open_tok.line, open_tok.column)
    if head.text == "(":
        raise PtbParseError("node without a label", open_tok.line, open_tok.column)
    label = head.text
    children: list[ConstituencyTree] = []
    j = i + 2
    while tokens[j].text != ")":
        if tokens[j].text == "(":
            child, j = _parse_node(tokens, j)
            children.append(child)
        else:
            children.append(ConstituencyTree.word(tokens[j].text))
            j += 1
    if not children:
        raise EmptyTree(
            f"node {label!r} has no children", open_tok.line, open_tok.column
        )
    return ConstituencyTree.phrase(label, children), j + 1


def _parse_group(tokens: list[_Token]) -> list[ConstituencyTree]:
    if tokens[1].text != "(":
        tree, _ = _parse_node(tokens, 0)
        return [tree]
    # Unlabeled wrapper "( ... )": unwrap to the trees it holds.
    trees = []
    i = 1
    while tokens[i].text != ")":
        if tokens[i].text != "(":
            tok = tokens[i]
            raise LeafWithoutLabel(
                f"surface token {tok.text!r} directly under an unlabeled wrapper",
                tok.line,
                tok.column,
            )
        tree, i = _parse_node(tokens, i)
        trees.append(tree)
    return trees


def parse_ptb_corpus(
    text: str, on_error: Callable[[PtbParseError], None] | None = None
) -> list[ConstituencyTree]:
    """Parse every top-level bracketed tree in text.

    Whitespace and line breaks between tokens are free.  An unlabeled outer
    wrapper "( ... )" around one or more trees is unwrapped.  With the
    default on_error=None the first malformed sentence raises; with a
    callback each error is reported to it and the sentence skipped.
    """
    trees: list[ConstituencyTree] = []
    for group, err in _toplevel_groups(_tokenize(text)):
        try:
            if err is not None:
                raise err
            trees.extend(_parse_group(group))
        except PtbParseError as exc:
            if on_error is None:
                raise
            on_error(exc)
    return trees


PUNCTUATION_LABELS = frozenset({".", ",", ":", "``", "''", "-LRB-", "-RRB-", "#"})
TRACE_LABEL = "-NONE-"


@dataclass(frozen=True)
class NormalizationOptions:
    """Cleanup switches applied before measuring a tree; defaults all on."""

    strip_punctuation: bool = True
    strip_traces: bool = True
    normalize_labels: bool = True


def normalize_label(label: str) -> str:
    """Cut function tags and coindices: "NP-SBJ-1" -> "NP", "S=2" -> "S".

    Labels that start with "-" ("-NONE-", "-LRB-", ...) are kept verbatim.
    """
    if label.startswith("-"):
        return label
    return label.split("-", 1)[0].split("=", 1)[0]


def normalize_tree(
    tree: ConstituencyTree, opts: NormalizationOptions = NormalizationOptions()
) -> ConstituencyTree:
    """Return a cleaned copy of the tree.

    Punctuation leaves (those under ".", ",", ":", quotes, brackets, "#") and
    trace leaves (under -NONE-) are dropped per the options, internal nodes
    left with no children are removed all the way up, and labels lose their
    function tags.  Raises EmptyAfterNormalization when nothing remains.
    The pass is idempotent.
    """
    cleaned = _normalize(tree, opts)
    if cleaned is None:
        raise EmptyAfterNormalization(
            "no pronounced material left after normalization"
        )
    return cleaned


def _normalize(
    node: ConstituencyTree, opts: NormalizationOptions
) -> ConstituencyTree | None:
    if node.is_leaf:
        return node
    label = normalize_label(node.label) if opts.normalize_labels else node.label
    drop_leaves = (opts.strip_punctuation and label in PUNCTUATION_LABELS) or (
        opts.strip_traces and label == TRACE_LABEL
    )
    children = []
    for child in node.children:
        if child.is_leaf:
            if not drop_leaves:
                children.append(child)
        else:
            kept = _normalize(child, opts)
            if kept is not None:
                children.append(kept)
    if not children:
        return None
    return ConstituencyTree.phrase(label, children)


@dataclass(frozen=True)
class DependencyUnit:
    """One unit of a dependency sentence: 1-based index, surface form, head.

    head is the index of the unit this one depends on, 0 for the root.
    """

    index: int
    surface: str
    head: int


@dataclass(frozen=True)
class DependencySentence:
    """A validated dependency sentence.

    Indices run exactly 1..n in order, heads stay within 0..n, no unit heads
    itself, and exactly one unit is the root (head 0).
    """

    units: tuple[DependencyUnit, ...]

    def __post_init__(self) -> None:
        n = len(self.units)
        indices = [unit.index for unit in self.units]
        if indices != list(range(1, n + 1)):
            raise NonContiguousIndices(
                f"unit indices must be exactly 1..{n} in order, got {indices}"
            )
        for unit in self.units:
            if not 0 <= unit.head <= n:
                raise HeadOutOfRange(
                    f"unit {unit.index} has head {unit.head}, outside 0..{n}"
                )
            if unit.head == unit.index:
                raise SelfHead(f"unit {unit.index} depends on itself")
        roots = [unit.index for unit in self.units if unit.head == 0]
        if len(roots) > 1:
            raise MultipleRoots(f"units {roots} all have head 0")
        if not roots:
            raise MissingRoot("no unit has head 0")

    def __len__(self) -> int:
        return len(self.units)

    @property
    def heads(self) -> tuple[int, ...]:
        return tuple(unit.head for unit in self.units)

    @classmethod
    def from_heads(
        cls, heads: Sequence[int], surfaces: Sequence[str] | None = None
    ) -> DependencySentence:
        if surfaces is None:
            surfaces = [f"w{i}" for i in range(1, len(heads) + 1)]
        units = tuple(
            DependencyUnit(i, surface, head)
            for i, (surface, head) in enumerate(zip(surfaces, heads), start=1)
        )
        return cls(units)


def parse_dep_corpus(
    text: str, on_error: Callable[[DepFormatError], None] | None = None
) -> list[DependencySentence]:
    """Parse blank-line separated blocks of INDEX<TAB>SURFACE<TAB>HEAD lines.

    Lines starting with "#" are ignored.  With the default on_error=None the
    first malformed sentence raises; with a callback each error is reported
    to it and the sentence skipped.
    """
    blocks: list[list[tuple[int, str]]] = []
    current: list[tuple[int, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        if raw.startswith("#"):
            continue
        if not raw.strip():
            if current:
                blocks.append(current)
                current = []
            continue
        current.append((line_no, raw))
    if current:
        blocks.append(current)

    sentences = []
    for block in blocks:
        try:
            sentences.append(_parse_block(block))
        except DepFormatError as exc:
            if on_error is None:
                raise
            on_error(exc)
    return sentences


def _parse_block(lines: list[tuple[int, str]]) -> DependencySentence:
    units = []
    for line_no, raw in lines:
        fields = raw.split("\t")
        if len(fields) != 3:
            raise MalformedLine(
                f"expected INDEX<TAB>SURFACE<TAB>HEAD, got {len(fields)} field(s)",
                line_no,
            )
        index_text, surface, head_text = fields
        try:
            index, head = int(index_text), int(head_text)
        except ValueError:
            raise MalformedLine("index and head must be integers", line_no) from None
        if not surface:
            raise MalformedLine("empty surface field", line_no)
        units.append(DependencyUnit(index, surface, head))
    return DependencySentence(tuple(units))
