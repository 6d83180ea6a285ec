import os
from dotenv import load_dotenv


load_dotenv()


def _optional_int(name):
    value = os.environ.get(name)
    return int(value) if value else None


class Config:
    """
    Base configuration class
    """

    # Truncation of the Fock-space oracle; None keeps the |alpha|-based heuristic
    N_MAX = _optional_int('CSECS_NMAX')
    TAIL_TOL = float(os.environ.get('CSECS_TAIL_TOL', 1e-10))

    # Branch switch on t*r shared by the overlap and fidelity closed forms
    TAU_SWITCH = float(os.environ.get('CSECS_TAU_SWITCH', 1e-6))

    QUAD_ORDER = int(os.environ.get('CSECS_QUAD_ORDER', 40))
    VERIFY_TOLERANCE = float(os.environ.get('CSECS_VERIFY_TOLERANCE', 1e-6))

    WORKERS = int(os.environ.get('CSECS_WORKERS', 1))
    OUTPUT_FORMAT = os.environ.get('CSECS_OUTPUT_FORMAT', 'csv').lower()

    LOG_LEVEL = os.environ.get('CSECS_LOG_LEVEL', 'INFO').upper()
    LOG_FORMAT = '%(levelname)-5.5s [%(name)s] %(message)s'
    LOG_DATEFMT = '%H:%M:%S'


class DevelopmentConfig(Config):
    """
    Development configuration
    """
    DEBUG = True
    LOG_LEVEL = os.environ.get('CSECS_LOG_LEVEL', 'DEBUG').upper()


class TestingConfig(Config):
    """
    Testing configuration
    """
    TESTING = True
    N_MAX = None
    WORKERS = 1
    LOG_LEVEL = 'WARNING'


class ProductionConfig(Config):
    """
    Production configuration
    """
    DEBUG = False


config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': DevelopmentConfig
}
