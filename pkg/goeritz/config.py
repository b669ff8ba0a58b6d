"""
Runtime configuration, read from the environment (.env supported)
"""

from dotenv import load_dotenv
load_dotenv()

import os

# Defaults for the CLI / API flags
DEFAULT_RADIUS = int(os.getenv('GOERITZ_RADIUS', '4'))
DEFAULT_BRANCH_BOUND = int(os.getenv('GOERITZ_BRANCH_BOUND', '6'))
DEFAULT_ORACLE_LENGTH = int(os.getenv('GOERITZ_ORACLE_LENGTH', '6'))

# Sampled checks
RANDOM_SEED = int(os.getenv('GOERITZ_SEED', '2013'))
ISOMETRY_SAMPLES = int(os.getenv('GOERITZ_SAMPLES', '100'))
HOMOMORPHISM_PAIRS = int(os.getenv('GOERITZ_HOMOMORPHISM_PAIRS', '10000'))
ROUND_TRIPS = int(os.getenv('GOERITZ_ROUND_TRIPS', '1000'))

# Desk-scale caps (hard limits, not raised by the environment)
MAX_RADIUS = 6
MAX_BRANCH_BOUND = 12
MAX_ORACLE_LENGTH = 12
ORACLE_MAX_STATES = int(os.getenv('GOERITZ_ORACLE_MAX_STATES', '2000000'))

LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'
