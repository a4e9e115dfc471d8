"""Serialize a stream in every representation and read it back.

The payload sizes track the analytic costs: each fixed-width field spends at
most one bit more than its information content.
"""
import tnetcost as tc
from tnetcost.costmodel import analytic_cost, params_for

ls = tc.gen_independent(n=60, m_per_snapshot=25, t_snapshots=32, seed=7)
p = params_for(ls)
print(ls, p)
print("repr   payload bits   analytic bits   blob bytes")
for rep in tc.Repr:
    blob = tc.encode(ls, rep)
    data = blob.to_bytes()
    assert tc.decode(data) == ls
    assert blob.payload_bit_length == tc.realized_length(p, rep)
    print(f"{rep.value:5s} {blob.payload_bit_length:14d} {analytic_cost(p, rep):15.1f} {len(data):12d}")

try:
    tc.decode(b"JUNK" + tc.encode(ls, "ls").to_bytes()[4:])
except tc.BlobDecodeError as exc:
    print("corrupted blob rejected:", exc.section, "-", exc)
