###########
# IMPORTS #
###########
import logging
import sys
from typing import Optional, Sequence

from fibre_invariants.commands import COMMANDS
from fibre_invariants.helpers.argparser import main_argparser
from fibre_invariants.helpers.errors import FibreError
from fibre_invariants.helpers.hashing import HashGenerator
from fibre_invariants.helpers.helpers import dump_json, to_jsonable

logger = logging.getLogger(__name__)


def run_record(command: str, seed: int, input_document: dict) -> dict:
    """Seed, input hash and command identifying the output of a run."""
    input_hash = HashGenerator.sha256_from_dict(to_jsonable(input_document))
    return {
        "command": command,
        "seed": seed,
        "input_hash": input_hash,
        "run_hash": HashGenerator.run_hash(command, seed, input_hash),
    }


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; prints the JSON payload on stdout and returns the exit code.

    Exit codes: 0 ok, 2 precondition error, 3 invariant violation.
    """
    args = main_argparser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    logger.info("Running %s with seed %s", args.command, args.seed)

    try:
        input_document, payload = COMMANDS[args.command](args)
    except FibreError as error:
        logger.error("%s failed: %s", args.command, error)
        print(dump_json(error.to_dict(), pretty=args.pretty))
        return error.exit_code

    payload["run"] = run_record(args.command, args.seed, input_document)
    print(dump_json(payload, pretty=args.pretty))
    return 0


###############
# MAIN SCRIPT #
###############

if __name__ == "__main__":
    sys.exit(main())
