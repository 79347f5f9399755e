from tools import DataError
from tools.config import RunConfig
from tools.mathieu import build_m23, golay_heptads, m23_demo

try:
    group = build_m23()
except DataError as error:
    print(f"M23 unavailable: {error}")
    raise SystemExit(2)

# The 253 heptads are the weight 7 words of the Golay code
heptads = golay_heptads(group)
print(f"{len(heptads)} heptads, first {sorted(x + 1 for x in heptads[0])}")

# The heptad and point pair stabilizers have equal permutation characters but different S
# The full scan over M23 is split over 4 processes
report = m23_demo(RunConfig(workers=4))
print(report)
