"""Newick reading and writing for unlabeled-or-leaf-labeled rooted trees.

Supported subset: leaf labels over [A-Za-z0-9_.-], whitespace between
tokens, and a single tree terminated by ";".  Every parenthesized group must
contain at least two comma-separated subtrees (so "();" and "(A);" are
rejected), which means parsed trees never contain an outdegree-1 vertex.
Branch lengths and internal-vertex labels are not part of the data model and
are rejected loudly rather than silently dropped.

Offsets in error messages are byte offsets into the UTF-8 text.
"""

from __future__ import annotations

from .trees import RootedTree, canonical_code

LABEL_BYTES = frozenset(
    b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_.-"
)
_WHITESPACE = frozenset(b" \t\r\n")


class NewickError(ValueError):
    """Problem with a Newick document; ``offset`` is the byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class NewickSyntaxError(NewickError):
    pass


class NewickUnsupportedError(NewickError):
    """Syntactically recognizable feature outside the supported subset."""


class _Parser:
    def __init__(self, text: str):
        self.data = text.encode("utf-8")
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.data) and self.data[self.pos] in _WHITESPACE:
            self.pos += 1

    def peek(self) -> int | None:
        return self.data[self.pos] if self.pos < len(self.data) else None

    def fail(self, expected: str) -> NewickSyntaxError:
        got = chr(self.data[self.pos]) if self.pos < len(self.data) else "end of input"
        return NewickSyntaxError(f"expected {expected}, found {got!r}", self.pos)

    def label(self) -> str:
        start = self.pos
        while self.pos < len(self.data) and self.data[self.pos] in LABEL_BYTES:
            self.pos += 1
        return self.data[start : self.pos].decode("ascii")

    def subtree(self) -> RootedTree:
        self.skip_ws()
        c = self.peek()
        if c == ord("("):
            open_pos = self.pos
            self.pos += 1
            children = [self.subtree()]
            self.skip_ws()
            while self.peek() == ord(","):
                self.pos += 1
                children.append(self.subtree())
                self.skip_ws()
            if self.peek() != ord(")"):
                raise self.fail("',' or ')'")
            if len(children) < 2:
                raise NewickSyntaxError(
                    "a group must contain at least two comma-separated subtrees",
                    open_pos,
                )
            self.pos += 1
            self.check_suffix(internal=True)
            return RootedTree(tuple(children))
        if c == ord(":"):
            raise NewickUnsupportedError("branch lengths are not supported", self.pos)
        text = self.label()
        self.check_suffix(internal=False)
        return RootedTree((), text or None)

    def check_suffix(self, internal: bool) -> None:
        self.skip_ws()
        c = self.peek()
        if c == ord(":"):
            raise NewickUnsupportedError("branch lengths are not supported", self.pos)
        if internal and c is not None and c in LABEL_BYTES:
            raise NewickUnsupportedError(
                "internal-vertex labels are not supported", self.pos
            )

    def document(self) -> RootedTree:
        tree = self.subtree()
        self.skip_ws()
        if self.peek() != ord(";"):
            raise self.fail("';'")
        self.pos += 1
        self.skip_ws()
        if self.pos != len(self.data):
            raise self.fail("end of input")
        return tree


def parse_newick(text: str) -> RootedTree:
    """Parse a single Newick document into a rooted tree."""
    return _Parser(text).document()


def _write(t: RootedTree) -> str:
    if t.is_leaf():
        return t.label or ""
    return "(" + ",".join(_write(c) for c in t.children) + ")"


def _write_canonical(t: RootedTree) -> str:
    if t.is_leaf():
        return ""
    ordered = sorted(t.children, key=canonical_code)
    return "(" + ",".join(_write_canonical(c) for c in ordered) + ")"


def to_newick(t: RootedTree, canonical: bool = False) -> str:
    """Serialize a tree; round-trips through parse_newick.

    With ``canonical`` set, children are emitted in canonical-code order and
    every leaf as an empty token, making the output a bit-exact function of
    the isomorphism class (the unlabeled single vertex serializes as ";").
    """
    if canonical:
        return _write_canonical(t) + ";"
    return _write(t) + ";"
