from pathlib import Path

PROJECT_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = PROJECT_ROOT / "data"
DEFAULT_STOPWORD_FILE = DATA_DIR / "stopwords.txt"

# Namespaces
WSDL_NS = "http://schemas.xmlsoap.org/wsdl/"
XSD_NS = "http://www.w3.org/2001/XMLSchema"

# Files picked up when scanning a directory for services
WSDL_EXTENSIONS = {'.wsdl', '.xml'}

# Parameter trees
DEFAULT_MAX_DEPTH = 16

# Operation similarity weights (inputs, outputs, name)
DEFAULT_WEIGHTS = (1.0, 1.0, 2.0)

# Jaro-Winkler
WINKLER_PREFIX_SCALE = 0.1
WINKLER_PREFIX_CAP = 4

# Lesk overlap: a gloss/context word pair counts when Jaro-Winkler exceeds this
DEFAULT_WSD_OVERLAP_THRESHOLD = 0.5

# Common words removed from glosses and contexts (the list always contains these)
LESK_COMMON_WORDS = frozenset({
    "the", "of", "to", "and", "a", "in", "is", "it", "you", "that",
    "he", "was", "for", "on", "are", "with", "as", "i",
})

# Binary classification in evaluation reports
DEFAULT_POSITIVE_THRESHOLD = 0.5

# Environment
WORDNET_ENV_VAR = "WSSIM_WORDNET_DIR"

# CLI exit codes
EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_ENV_ERROR = 3
