"""Nilpotent motives of the m-loop quiver, three ways, plus a brute-force count."""

from nullcone_motives.finite_field import count_nilpotent_fq
from nullcone_motives.hesselink import hesselink_motive
from nullcone_motives.motive import eval_at
from nullcone_motives.nullcone import motive_recursive, motive_resolved
from nullcone_motives.quiver import loop_quiver


def main():
    for m in (1, 2, 3):
        q = loop_quiver(m)
        print(f"{m}-loop quiver")
        for d in range(1, 5):
            rec = motive_recursive(q, (d,))
            same = rec == motive_resolved(q, (d,))
            if d <= 3:
                same = same and rec == hesselink_motive(q, (d,))
            print(f"  [N_{d}] = {rec}    methods agree: {same}")
    q = loop_quiver(1)
    for p in (2, 3):
        n = count_nilpotent_fq(q, (3,), p)
        print(f"nilpotent 3x3 matrices over F_{p}: {n} (motive gives {eval_at(motive_recursive(q, (3,)), p)})")


if __name__ == "__main__":
    main()
