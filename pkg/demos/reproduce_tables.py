"""
Recomputing the published examples and tables
==============================================

Runs every reproduction target and prints how far each computed value sits
from the printed one. Targets that deviate are reported, not hidden.
"""

import sys
import tempfile

from ivrough.reproduce import ReproTarget, run_target, write_outcome

out_dir = sys.argv[1] if len(sys.argv) > 1 else tempfile.mkdtemp(prefix="ivrough-")

for target in ReproTarget:
    outcome = run_target(target)
    write_outcome(outcome, out_dir)
    print(outcome.summary())
    for c in outcome.failures()[:3]:
        print(f"    {c.item}: computed {c.computed}, published {c.expected}")

print("\nCSV files written to", out_dir)
