"""Weak orders of the addition table and which ones real sets actually produce."""
from sumprod.prototypes import addition_type, count_prototypes, is_realizable, iter_prototypes

for n in range(1, 7):
    print(f"order {n}: {count_prototypes(n)} prototypes")

unreal = [p for p in iter_prototypes(4) if not is_realizable(p)[0]]
print(f"\n{len(unreal)} of the order-4 prototypes are not addition tables, e.g. {unreal[0].to_text()}")

p = addition_type((1, 2, 4, 7))
ok, witness = is_realizable(p)
print(f"type of {{1,2,4,7}}: {p.to_text()}  witness: {[str(a) for a in witness]}")
