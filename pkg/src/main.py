"""Entrypoint: carrega o .env, configura logs no stderr e despacha o subcomando."""

import logging
import sys

from dotenv import load_dotenv

from src.cli.commands import run

load_dotenv()

logging.basicConfig(
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    level=logging.INFO,
    stream=sys.stderr,
)

logger = logging.getLogger(__name__)


def main() -> None:
    logger.debug("argumentos: %s", sys.argv[1:])
    sys.exit(run())


if __name__ == "__main__":
    main()
