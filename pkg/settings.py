import os


THRACKLES_THREADS = int(os.getenv("THRACKLES_THREADS", "1"))
THRACKLES_SEED = int(os.getenv("THRACKLES_SEED", "0"))
THRACKLES_SAMPLES = int(os.getenv("THRACKLES_SAMPLES", "100"))
THRACKLES_LOG_LEVEL = os.getenv("THRACKLES_LOG_LEVEL", "WARNING").upper()  # DEBUG | INFO | WARNING


if THRACKLES_THREADS < 1:
    THRACKLES_THREADS = 1
