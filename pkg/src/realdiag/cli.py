"""Command-line front end.

Exit codes: 0 success, 2 input or usage error, 3 reconstruction residual
above 1e-8, 4 eigensolver did not converge, 5 training diverged.
"""

import argparse
import sys
import time

import numpy as np

from . import decomp
from .densecore import frobenius_norm, numerical_rank
from .eig import eig_normal_lift
from .errors import ConvergenceError, DivergenceError, ShapeError
from .fit import FitConfig, fit_lowrank, loss_and_gradient, predict, sign_accuracy
from .lift import check_quarter_turn, lift_imag, lift_real
from .matfile import MatrixFileError, format_complex, format_matrix, format_real, read_matrix
from .signrank import diagonal_census, rank1_sign_feasible

EXIT_OK, EXIT_INPUT, EXIT_DEGRADED, EXIT_NOCONV, EXIT_DIVERGED = 0, 2, 3, 4, 5
RESIDUAL_GATE = 1e-8


class InputError(Exception):
    pass


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _read_square(path, kinds):
    kind, M = read_matrix(path)
    if kind not in kinds:
        raise InputError(f"{path}: expected a {' or '.join(kinds)} matrix, got {kind}")
    if M.shape[0] != M.shape[1]:
        raise InputError(f"{path}: matrix must be square, got {M.shape[0]}x{M.shape[1]}")
    return kind, M


def cmd_lift(args):
    _, A = _read_square(args.input, ("real",))
    X = lift_imag(A) if args.imag else lift_real(A)
    _write(args.output, format_matrix(X, "complex"))
    return EXIT_OK


def _pair(z):
    return f"({format_real(z.real)},{format_real(z.imag)})"


def cmd_decompose(args):
    kind, M = _read_square(args.input, ("real", "complex"))
    start = time.perf_counter()
    if kind == "complex":
        # a lift file: decompose X directly, the target is Re(X)
        if not check_quarter_turn(M, 1e-10):
            raise InputError(f"{args.input}: complex input is not a normal lift (X* != -iX)")
        A = np.ascontiguousarray(M.real)
        D = eig_normal_lift(M)
    else:
        A = M
        D = decomp.unitary_diagonalize(A)

    rank_tol = args.auto_tol if args.auto_tol is not None else 1e-10
    if args.rank is not None:
        if not 1 <= args.rank <= D.r:
            raise InputError(f"--rank must lie in [1, {D.r}], got {args.rank}")
        D = decomp.truncate(D, args.rank)
    elif args.auto_tol is not None:
        if not args.auto_tol > 0:
            raise InputError("--auto-tol must be positive")
        D = decomp.truncate_by_tol(D, args.auto_tol)

    res = decomp.residual(A, D)
    k = numerical_rank(A, rank_tol)
    elapsed = (time.perf_counter() - start) * 1e3

    lines = [
        f"n: {D.n}",
        f"r: {D.r}",
        f"residual: {format_real(res)}",
        f"rank_input: {k}",
        f"rank_bound_2k: {2 * k}",
        "lambda: " + " ".join(_pair(z) for z in D.lam),
    ]
    if args.emit_basis:
        lines += [f"S[{i}]: " + " ".join(format_complex(z) for z in row) for i, row in enumerate(D.S)]
    if args.timing:
        lines.append(f"elapsed_ms: {elapsed:.3f}")
    _write(args.report, "\n".join(lines) + "\n")
    return EXIT_OK if res <= RESIDUAL_GATE else EXIT_DEGRADED


def cmd_signcheck(args):
    _, Y = _read_square(args.input, ("sign",))
    plus, minus = diagonal_census(Y)
    feasible = rank1_sign_feasible(Y)
    _write(args.output, (
        f"rank1_feasible: {'true' if feasible else 'false'}\n"
        f"diag_plus: {plus}\n"
        f"diag_minus: {minus}\n"
    ))
    return EXIT_OK


def cmd_fit(args):
    kind, T = _read_square(args.target, ("real", "sign"))
    if args.loss == "logistic" and kind != "sign":
        raise InputError("logistic loss needs a sign target")
    config = FitConfig(
        m=args.rank, loss=args.loss, learning_rate=args.lr, epochs=args.epochs,
        l2=args.l2, seed=args.seed, init_scale=args.init_scale,
    )
    model, trace = fit_lowrank(T, config)
    final, _ = loss_and_gradient(model, T, config)
    _write(args.model, format_matrix(model.E, "complex") + format_matrix(model.w[None, :], "complex"))
    lines = [f"epochs: {len(trace)}", f"loss: {format_real(final)}"]
    if kind == "sign":
        lines.append(f"sign_accuracy: {format_real(sign_accuracy(model, T))}")
    else:
        lines.append(f"rel_error: {format_real(frobenius_norm(T - predict(model)) / max(1.0, frobenius_norm(T)))}")
    _write(args.metrics, "\n".join(lines) + "\n")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="realdiag",
        description="Real square matrices as the real part of a unitary diagonalisation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lift", help="write the normal lift A + iA^T of a real matrix")
    p.add_argument("input")
    p.add_argument("output", nargs="?", default="-")
    p.add_argument("--imag", action="store_true", help="write A^T + iA instead")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("decompose", help="decompose a real matrix (or its lift) as Re(S diag(lam) S*)")
    p.add_argument("input")
    p.add_argument("report", nargs="?", default="-")
    trunc = p.add_mutually_exclusive_group()
    trunc.add_argument("--rank", type=int, help="keep the r eigenpairs of largest modulus")
    trunc.add_argument("--auto-tol", type=float, help="keep eigenvalues with |lam| > tol * max|lam|")
    p.add_argument("--emit-basis", action="store_true", help="include the columns of S")
    p.add_argument("--timing", action="store_true", help="append elapsed_ms (makes output non-reproducible)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("signcheck", help="rank-1 diagonal feasibility test for a sign matrix")
    p.add_argument("input")
    p.add_argument("output", nargs="?", default="-")
    p.set_defaults(func=cmd_signcheck)

    p = sub.add_parser("fit", help="gradient-descent fit of Re(E diag(w) E*)")
    p.add_argument("target")
    p.add_argument("model")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--loss", choices=("squared", "logistic"), default="squared")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epochs", type=int, default=2000)
    p.add_argument("--lr", type=float, default=0.05)
    p.add_argument("--l2", type=float, default=0.0)
    p.add_argument("--init-scale", type=float, default=0.1)
    p.add_argument("--metrics", default="-", help="where to write final metrics (default stdout)")
    p.set_defaults(func=cmd_fit)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except (InputError, MatrixFileError, ShapeError, ValueError, OSError) as exc:
        print(f"realdiag {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConvergenceError as exc:
        print(f"realdiag {args.command}: {exc}", file=sys.stderr)
        return EXIT_NOCONV
    except DivergenceError as exc:
        print(f"realdiag {args.command}: {exc}", file=sys.stderr)
        return EXIT_DIVERGED


def run():
    sys.exit(main())
