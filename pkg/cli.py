"""
Command Line Module

Front end that runs the lemma suite, the protocol verifications, Born rule
evaluations, the Rel search and dimension reports, printing text or JSON
reports. Defaults come from CQP_* environment variables and are overridden by
flags.

Exit codes: 0 success, 1 verification failure, 2 unsupported operation (for
instance teleportation over the Booleans), 3 shape mismatch, 4 parse error.

Classes:
    RunConfig: Resolved configuration of one run
"""

import argparse
import logging
import os
import re
import sys
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from abstract_qm import (
    BornRuleVerifier,
    DimensionVerifier,
    SpectralDecomposition,
    hadamard_measurement,
    standard_measurement,
)
from base_verifier import BaseVerifier
from exceptions import (
    CategoryError,
    ParseError,
    ShapeMismatchError,
    UnsupportedOperationError,
)
from generators import make_rng
from lemma_suite import LemmaSuiteVerifier
from matrix_morphisms import Morphism, column, from_rows, scalar_action
from protocols import (
    CnotTeleportationVerifier,
    EntanglementSwapVerifier,
    GateTeleportationVerifier,
    RelSearchVerifier,
    TeleportationVerifier,
)
from scalar_rings import COMPLEX_ROOT_TWO, SEMIRINGS, Semiring, get_semiring
from shape_category import I, Q, Shape, Tensor, copies, parse_shape
from teleportation_base import (
    BellBase,
    TeleportationBase,
    bell_matrices,
    make_bell_base,
    make_matrix_base,
    random_base,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_UNSUPPORTED = 2
EXIT_SHAPE_MISMATCH = 3
EXIT_PARSE_ERROR = 4

PROTOCOLS = ("teleport", "gate-teleport", "cnot-teleport", "swap")
GATES = ("1", "beta2", "beta3", "beta4", "hadamard")
BASES = ("bell", "domain-major", "codomain-major", "random")
MEASUREMENTS = ("standard", "bell", "hadamard")
FORMATS = ("text", "json")


def get_env_var(var_name: str, default: Optional[str] = None) -> str:
    """Get environment variable with error handling."""
    value = os.getenv(var_name, default)
    if value is None:
        raise ValueError(f"Environment variable {var_name} is not set")
    return value


@dataclass
class RunConfig:
    """
    Everything one invocation needs; the seed determines all randomized content.

    Attributes:
        command (str): lemmas, protocol, born, rel-search or dim
        semiring (Semiring): Scalars of the run
        seed (int): Seed of the run's generator
        count (int): Cases per lemma check
        output_format (str): text or json
        out (Optional[str]): Report file; stdout when None
        verbose (int): 0 warnings, 1 info, 2 debug
    """

    command: str
    semiring: Semiring = COMPLEX_ROOT_TWO
    seed: int = 0
    count: int = 200
    output_format: str = "text"
    out: Optional[str] = None
    verbose: int = 0
    protocol: Optional[str] = None
    gate: str = "hadamard"
    base: str = "bell"
    state: Optional[str] = None
    measurement: str = "standard"
    shape: Optional[str] = None


def _parse_int(var_name: str, default: str) -> int:
    text = get_env_var(var_name, default)
    try:
        value = int(text)
    except ValueError:
        raise ParseError(f"{var_name}={text!r} is not an integer")
    if value < 0:
        raise ParseError(f"{var_name}={text!r} must not be negative")
    return value


def non_negative_int(text: str) -> int:
    """argparse type for --seed and --count."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} must not be negative")
    return value


class ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors raise ParseError (exit code 4) instead of exiting."""

    def error(self, message: str):
        raise ParseError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--semiring", choices=sorted(SEMIRINGS), default=None, help="scalars of the run")
    common.add_argument("--seed", type=non_negative_int, default=None, help="seed of the random generator")
    common.add_argument("--count", type=non_negative_int, default=None, help="random cases per lemma check")
    common.add_argument("--format", dest="output_format", choices=FORMATS, default=None)
    common.add_argument("--out", default=None, help="write the report to this path")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = ArgumentParser(prog="cqp", description="Exact verification of categorical quantum protocols")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("lemmas", parents=[common], help="run the randomized lemma suite")

    protocol = commands.add_parser("protocol", parents=[common], help="verify a protocol diagram")
    protocol.add_argument("protocol", choices=PROTOCOLS)
    protocol.add_argument("--gate", choices=GATES, default="hadamard", help="unitary teleported by gate-teleport")
    protocol.add_argument("--base", choices=BASES, default="bell", help="teleportation base")

    born = commands.add_parser("born", parents=[common], help="evaluate the Born rule")
    born.add_argument("--state", required=True, help='state such as "s*(1,1)"')
    born.add_argument("--measurement", choices=MEASUREMENTS, default="standard")

    commands.add_parser("rel-search", parents=[common], help="search Rel for a teleportation base")

    dim = commands.add_parser("dim", parents=[common], help="report both dimensions of a shape")
    dim.add_argument("shape", help='shape expression such as "Q*Q"')
    return parser


def config_from_args(argv: Optional[List[str]] = None) -> RunConfig:
    """
    Parse the command line over the CQP_* environment defaults.

    Raises:
        ParseError: If an argument or environment default is malformed
    """
    args = build_parser().parse_args(argv)
    semiring_name = args.semiring or get_env_var("CQP_SEMIRING", COMPLEX_ROOT_TWO.name)
    try:
        semiring = get_semiring(semiring_name)
    except ValueError as e:
        raise ParseError(str(e))
    output_format = args.output_format or get_env_var("CQP_FORMAT", "text")
    if output_format not in FORMATS:
        raise ParseError(f"Unknown output format {output_format!r}; use one of {FORMATS}")
    return RunConfig(
        command=args.command,
        semiring=semiring,
        seed=args.seed if args.seed is not None else _parse_int("CQP_SEED", "0"),
        count=args.count if args.count is not None else _parse_int("CQP_COUNT", "200"),
        output_format=output_format,
        out=args.out,
        verbose=args.verbose,
        protocol=getattr(args, "protocol", None),
        gate=getattr(args, "gate", "hadamard"),
        base=getattr(args, "base", "bell"),
        state=getattr(args, "state", None),
        measurement=getattr(args, "measurement", "standard"),
        shape=getattr(args, "shape", None),
    )


_STATE = re.compile(r"^\s*(?:(?P<scalar>[^()]*?)\s*\*\s*)?\(\s*(?P<entries>[^()]*)\)\s*$")


def parse_state(text: str, shape: Optional[Shape], semiring: Semiring) -> Morphism:
    """
    Parse ``[scalar *] (e1, e2, ...)`` into a state I -> shape.

    Args:
        text (str): The state text
        shape (Optional[Shape]): Target shape; inferred from the entry count when None
            (1 -> I, 2 -> Q, 4 -> Q ⊗ Q, otherwise n·I)
        semiring (Semiring): Scalars of the entries

    Returns:
        Morphism: The state

    Raises:
        ParseError: If the text is malformed
        ShapeMismatchError: If the entry count does not fit the shape
    """
    match = _STATE.match(text)
    if match is None:
        raise ParseError(f"Malformed state {text!r}; expected [scalar *] (e1, e2, ...)")
    pieces = [piece.strip() for piece in match.group("entries").split(",")]
    if not pieces or not all(pieces):
        raise ParseError(f"Empty entry in state {text!r}")
    entries = [semiring.parse(piece) for piece in pieces]
    if shape is None:
        shape = {1: I, 2: Q, 4: Tensor(Q, Q)}.get(len(entries)) or copies(len(entries), I)
    if shape.dim != len(entries):
        raise ShapeMismatchError(f"State {text!r} has {len(entries)} entries but {shape} has dimension {shape.dim}")
    state = column(shape, entries, semiring)
    if match.group("scalar"):
        state = scalar_action(semiring.parse(match.group("scalar")), state)
    return state


def _teleportation_base(cfg: RunConfig) -> TeleportationBase:
    try:
        if cfg.base == "bell":
            return make_bell_base(cfg.semiring)
        if cfg.base == "random":
            return random_base(make_rng(cfg.seed), cfg.semiring)
        return make_matrix_base(cfg.base, cfg.semiring)
    except UnsupportedOperationError as e:
        raise UnsupportedOperationError(
            f"{e}; no teleportation base exists over {cfg.semiring.name} (see rel-search)"
        )


def _gate(name: str, semiring: Semiring) -> Morphism:
    if name == "hadamard":
        s = semiring.teleportation_scalar()
        return scalar_action(s, from_rows(Q, Q, [[1, 1], [1, -1]], semiring))
    return bell_matrices(semiring)[GATES.index(name)]


def _emit(verifier: BaseVerifier, cfg: RunConfig) -> Dict:
    report = verifier.generate_report()
    verifier.emit_report(report, cfg.output_format, cfg.out)
    return report


def cmd_lemmas(cfg: RunConfig) -> int:
    report = _emit(LemmaSuiteVerifier(cfg.semiring, cfg.seed, cfg.count), cfg)
    return EXIT_OK if report["ok"] else EXIT_FAILURE


def cmd_protocol(cfg: RunConfig) -> int:
    """
    Verify one protocol diagram.

    Returns:
        int: 0 when the diagram commutes and its side equations hold, 1 otherwise

    Raises:
        UnsupportedOperationError: If the semiring has no teleportation base, or
            cnot-teleport/swap is asked of a base without the Bell equations
    """
    tb = _teleportation_base(cfg)
    if cfg.protocol in ("cnot-teleport", "swap") and not isinstance(tb, BellBase):
        raise UnsupportedOperationError(f"{cfg.protocol} needs a base satisfying the Bell equations, got {tb.label}")

    if cfg.protocol == "teleport":
        verifier = TeleportationVerifier(tb)
    elif cfg.protocol == "gate-teleport":
        verifier = GateTeleportationVerifier(tb, _gate(cfg.gate, cfg.semiring))
    elif cfg.protocol == "cnot-teleport":
        verifier = CnotTeleportationVerifier(tb)
    else:
        verifier = EntanglementSwapVerifier(tb)
    report = _emit(verifier, cfg)
    return EXIT_OK if report["ok"] else EXIT_FAILURE


def _measurement(cfg: RunConfig) -> Optional[SpectralDecomposition]:
    # None selects the standard measurement of whatever shape the state infers.
    if cfg.measurement == "bell":
        return _teleportation_base(cfg).observation_decomposition()
    if cfg.measurement == "hadamard":
        return hadamard_measurement(cfg.semiring)
    return None


def cmd_born(cfg: RunConfig) -> int:
    sd = _measurement(cfg)
    if sd is None:
        state = parse_state(cfg.state, None, cfg.semiring)
        sd = standard_measurement(state.cod, cfg.semiring)
    else:
        state = parse_state(cfg.state, sd.shape, cfg.semiring)
    report = _emit(BornRuleVerifier(sd, state), cfg)
    return EXIT_OK if report["ok"] else EXIT_FAILURE


def cmd_rel_search(cfg: RunConfig) -> int:
    report = _emit(RelSearchVerifier(), cfg)
    return EXIT_OK if report["ok"] else EXIT_FAILURE


def cmd_dim(cfg: RunConfig) -> int:
    report = _emit(DimensionVerifier(parse_shape(cfg.shape), cfg.semiring), cfg)
    return EXIT_OK if report["ok"] else EXIT_FAILURE


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "lemmas": cmd_lemmas,
    "protocol": cmd_protocol,
    "born": cmd_born,
    "rel-search": cmd_rel_search,
    "dim": cmd_dim,
}


def exit_code_for(error: Exception) -> int:
    if isinstance(error, ParseError):
        return EXIT_PARSE_ERROR
    if isinstance(error, ShapeMismatchError):
        return EXIT_SHAPE_MISMATCH
    if isinstance(error, UnsupportedOperationError):
        return EXIT_UNSUPPORTED
    return EXIT_FAILURE


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point of the cqp command.

    Resolves the configuration, dispatches to the command and maps package
    errors onto exit codes, printing the error to stderr.

    Returns:
        int: The exit code
    """
    try:
        cfg = config_from_args(argv)
    except CategoryError as e:
        print(f"Error: {e}", file=sys.stderr)
        return exit_code_for(e)

    level = {0: logging.WARNING, 1: logging.INFO}.get(cfg.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logger.debug("run configuration: %s", cfg)

    try:
        return COMMANDS[cfg.command](cfg)
    except CategoryError as e:
        print(f"Error: {e}", file=sys.stderr)
        return exit_code_for(e)


if __name__ == "__main__":
    sys.exit(main())
