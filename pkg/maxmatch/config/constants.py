# Exhaustive maximum-matching solver
EXACT_CAP: int = 20  # largest number of nodes

# Model checker
TRANSITION_CAP: int = 50_000_000  # refuse larger transition relations
POINTER_DOMAINS: tuple[str, ...] = (
    "neighbors",
    "neighbors_plus_foreign",
    "valid_plus_corrupt",
)

# Probability for a random initial pointer to be drawn from the whole node set
FOREIGN_RATE: float = 0.2

# Command-line exit codes
EXIT_SUCCESS: int = 0
EXIT_CHECK_FAILURE: int = 2
EXIT_INPUT_ERROR: int = 3
EXIT_CAP_REFUSAL: int = 4
