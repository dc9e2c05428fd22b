# Rebuild the rank-4 figures and compare with the transcribed edge lists.
import sys

from compdual.export import FIXTURES, compare_fixture, load_fixture, to_dot, to_tikz
from compdual.graphs import build

for name, graph in FIXTURES.items():
    r = compare_fixture(build(graph, 4), load_fixture(name))
    print(name, "matches" if r["passed"] else r)

sys.stdout.write(to_tikz(build("rc", 3)))
sys.stdout.write(to_dot(build("qc", 2)))
