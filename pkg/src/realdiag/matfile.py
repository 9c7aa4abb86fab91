"""Plain-text matrix files.

A block is a header line ``rows cols kind`` (kind is ``real``, ``complex``
or ``sign``) followed by ``rows`` lines of ``cols`` whitespace-separated
values. Complex values are written ``a+bi`` / ``a-bi`` with no spaces.
Reals use the shortest repr that round-trips, with a trailing ``.0``
dropped, so real and sign data survive a write/read cycle bit for bit.
A file may hold several blocks back to back; blank lines are ignored.
"""

import math
import re

import numpy as np

KINDS = ("real", "complex", "sign")

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_REAL_RE = re.compile(rf"[+-]?{_NUM}")
_COMPLEX_RE = re.compile(rf"([+-]?{_NUM})([+-]{_NUM})i")


class MatrixFileError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.line, self.column = line, column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


def format_real(x):
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


def format_complex(z):
    z = complex(z)
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{format_real(z.real)}{sign}{format_real(abs(z.imag))}i"


def format_matrix(M, kind):
    M = np.asarray(M)
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if M.ndim != 2:
        raise ValueError("only 2-D arrays can be written")
    fmt = {"real": format_real, "complex": format_complex, "sign": lambda v: str(int(v))}[kind]
    lines = [f"{M.shape[0]} {M.shape[1]} {kind}"]
    lines += [" ".join(fmt(v) for v in row) for row in M]
    return "\n".join(lines) + "\n"


def _parse_value(tok, kind, lineno, col):
    if kind == "sign":
        if tok not in ("1", "-1"):
            raise MatrixFileError(f"sign entry must be -1 or 1, got {tok!r}", lineno, col)
        return int(tok)
    if kind == "real":
        if not _REAL_RE.fullmatch(tok):
            raise MatrixFileError(f"malformed real entry {tok!r}", lineno, col)
        return float(tok)
    m = _COMPLEX_RE.fullmatch(tok)
    if m is None:
        raise MatrixFileError(f"malformed complex entry {tok!r} (expected a+bi)", lineno, col)
    return complex(float(m.group(1)), float(m.group(2)))


def parse_matrices(text):
    """Parse every block in ``text``; returns a list of ``(kind, array)``."""
    lines = [(k + 1, ln) for k, ln in enumerate(text.splitlines()) if ln.strip()]
    blocks = []
    pos = 0
    while pos < len(lines):
        lineno, header = lines[pos]
        parts = header.split()
        if len(parts) != 3 or parts[2] not in KINDS or not all(p.isdigit() for p in parts[:2]):
            raise MatrixFileError(f"bad header {header.strip()!r}, expected 'rows cols kind'", lineno)
        rows, cols, kind = int(parts[0]), int(parts[1]), parts[2]
        if rows < 1 or cols < 1:
            raise MatrixFileError("dimensions must be positive", lineno)
        pos += 1
        data = []
        for r in range(rows):
            if pos >= len(lines):
                raise MatrixFileError(f"expected {rows} rows, file ended after {r}", lineno)
            rowno, row = lines[pos]
            toks = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", row)]
            if len(toks) != cols:
                raise MatrixFileError(f"expected {cols} entries, found {len(toks)}", rowno)
            data.append([_parse_value(t, kind, rowno, c) for c, t in toks])
            pos += 1
        dtype = {"real": np.float64, "complex": np.complex128, "sign": np.int8}[kind]
        arr = np.array(data, dtype=dtype)
        if kind != "sign" and not np.all(np.isfinite(arr)):
            raise MatrixFileError("non-finite entry", lineno)
        blocks.append((kind, arr))
    return blocks


def parse_matrix(text):
    """Parse a file holding exactly one block."""
    blocks = parse_matrices(text)
    if len(blocks) != 1:
        raise MatrixFileError(f"expected one matrix block, found {len(blocks)}")
    return blocks[0]


def read_matrix(path):
    with open(path) as fh:
        return parse_matrix(fh.read())


def write_matrix(path, M, kind):
    with open(path, "w") as fh:
        fh.write(format_matrix(M, kind))
