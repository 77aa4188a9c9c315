"""Re-verify the shipped obstruction catalogs from scratch.

The 1-apex sub-unicyclic class has exactly 29 minor-obstructions.  Their
adjacency lists ship with the package (transcribed once from the source
figures); nothing here trusts the transcription -- every record is re-tested:
the graph must need two deletions to become sub-unicyclic while every
one-step minor needs at most one.

Run:  python demos/02_catalog_verification.py
"""

from apexobs import load_catalog, verify_catalog
from apexobs.obstructions import check_obstruction
from apexobs.graphs import complete_graph

for k in (0, 1):
    cat = load_catalog(k)
    print(f"catalog k={k}: {len(cat)} records ({cat.source_note})")
    report = verify_catalog(cat)
    print(report.to_text())
    print()

# what a refutation looks like: K4 is NOT an obstruction at k=0, because
# deleting one of its edges leaves K4-minus-an-edge, which is still outside
# the class -- so K4 is not minor-minimal
check = check_obstruction(complete_graph(4), 0)
print("planted K4 at k=0:", "obstruction" if check.is_obstruction else
      f"refuted at the {check.failed_step} step")
