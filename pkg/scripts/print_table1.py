"""Print the symbolic Beilinson table and its values for the given charges."""
import argparse

from fano_instanton.charge import CohomDefect, InstantonCharge
from fano_instanton.numerics import format_table1, table1, table1_euler_columns


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("charges", nargs="*", default=["4,2,2", "3,1,3"], help="A,B,G[,DELTA,EPS]")
    args = ap.parse_args()
    print(format_table1())
    for text in args.charges:
        vals = [int(x) for x in text.split(",")]
        ch, defect = InstantonCharge(*vals[:3]), CohomDefect(*vals[3:5])
        print(f"\ncharge {ch}, (delta, epsilon) = ({defect.delta}, {defect.epsilon})")
        print(format_table1(table1(ch, defect)))
        for p, ok, lhs, rhs in table1_euler_columns(ch, defect):
            print(f"  column p={p}: alternating sum {lhs}, chi {rhs}  {'ok' if ok else 'MISMATCH'}")


if __name__ == "__main__":
    main()
