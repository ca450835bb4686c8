"""Hesselink strata for the 2-loop quiver and the acyclic triangle."""

from nullcone_motives.hesselink import hesselink_motive, strata_table
from nullcone_motives.quiver import atilde2_quiver, loop_quiver


def show(q, d):
    print(f"quiver {q.vertices}, d = {d}")
    for row in strata_table(q, d, nonzero_only=True):
        cw = ", ".join(row["coweight"])
        print(f"  ({cw})  phi = {row['phi']:>2}  sst locus = {row['semistable_locus']}")
    print(f"  total: {hesselink_motive(q, d)}")


def main():
    show(loop_quiver(2), (2,))
    show(loop_quiver(2), (3,))
    show(atilde2_quiver(), (1, 1, 1))


if __name__ == "__main__":
    main()
