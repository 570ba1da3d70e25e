"""Default settings for matrix construction, the eigensolver and campaigns.

Change values here to retune every command at once; the CLI and
``CARTPROD_CAPACITY`` override individual fields at runtime.
"""

# Largest number of entries any constructed matrix may hold
CAPACITY = 2 ** 24
CAPACITY_ENV_VAR = "CARTPROD_CAPACITY"

# Exact (Gaussian integer) components must fit a signed 64-bit word
EXACT_LIMIT = 2 ** 63 - 1

# Eigensolver
JACOBI_TOL = 1e-10
MAX_SWEEPS = 100
SYMMETRY_TOL = 1e-12
INERTIA_ZERO_SCALE = 1e-7

# Verification campaigns
ENTRY_BOUND = 9
INJECTION_RATE = 0.25
COUNTEREXAMPLE_CAP = 5
MAX_ORDER_LIMIT = 4
