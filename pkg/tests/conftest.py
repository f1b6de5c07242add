import os
import sys

from hypothesis import HealthCheck, settings

# Allow running the suite from a checkout without installing the package.
sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "src"))

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")
