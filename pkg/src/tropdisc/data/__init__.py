from pathlib import Path

DATA = Path(__file__).parent
PAPER_SYSTEM = DATA / "paper_system.json"
PAPER_DISCRIMINANT = DATA / "paper_discriminant.txt"
UNIVARIATE_SYSTEM = DATA / "univariate_system.json"
UNIVARIATE_DISCRIMINANT = DATA / "univariate_discriminant.txt"
