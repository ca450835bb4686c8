"""Motivic DT invariants of symmetric quivers and the nullcone series they generate."""

from nullcone_motives.dt import dt_invariants, nullcone_dt_check
from nullcone_motives.quiver import Quiver, loop_quiver


def main():
    double = Quiver(("i", "j"), ((0, 2), (2, 0)))
    for name, q in (("2-loop", loop_quiver(2)), ("3-loop", loop_quiver(3)), ("double arrow", double)):
        res = dt_invariants(q, 4 if q.n == 1 else 3)
        print(name)
        for d in sorted(res.dt, key=lambda v: (v.total, tuple(v))):
            p = res.in_v(d)
            if p:
                print(f"  DT_{tuple(d)}(v) = {str(p).replace('w', 'v')}   at v=1: {p.evaluate(1)}")
        print(f"  nullcone series reproduced: {nullcone_dt_check(q, 3)}")


if __name__ == "__main__":
    main()
