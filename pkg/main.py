"""
FastSTray - Main Entry Point

    python main.py simplify --input track.csv --output result.json
    python main.py sweep --input 20081023025304.plt --format plt --coefficient direction --sweep 1,2,3,4,5,6
    python main.py bench --bench-sizes 10000,20000,40000,80000
"""
import logging
import sys

from src.cli.commands import run

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[
        logging.StreamHandler(sys.stderr)
    ]
)
logging.captureWarnings(True)

logger = logging.getLogger(__name__)


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.info("Stopped by user")
        sys.exit(1)
