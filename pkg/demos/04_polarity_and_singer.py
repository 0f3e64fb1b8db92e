"""Polarity graphs, Singer difference sets, and recurrence labelings.

The polarity graph on PG(2,q) (points adjacent when orthogonal) misses
the diameter-2 Moore bound by the smallest known margin.  It has a purely
arithmetic twin: index the plane's points by a Singer cycle and adjacency
becomes "i + j falls in a planar difference set mod q^2+q+1".  That twin
makes graceful labelings constructive -- an alternating recurrence walks a
Hamiltonian path whose consecutive sums all avoid (or all hit) the
difference set.
"""

from collections import Counter

import radiolab as rl

print("Singer planar difference sets (canonical translates)")
for q in (2, 3, 4, 5, 7):
    ds = rl.singer_difference_set(q)
    ok = rl.is_planar_difference_set(ds.elements, ds.modulus)
    print(f"  q={q}: D = {ds.elements} mod {ds.modulus}  (valid: {ok})")

print()
print("Singer graph vs polarity graph")
for q in (2, 3, 4):
    s = rl.singer_graph(q)
    er = rl.erdos_renyi_polarity(q)
    iso = rl.are_isomorphic(s, er)
    degs = Counter(s.degrees())
    print(f"  q={q}: n={s.n}, degrees {dict(sorted(degs.items()))}, "
          f"isomorphic: {iso is not None}")
print("  (the q+1 vertices of degree q are the quadric/self-orthogonal points)")

print()
print("recurrence labelings: graceful for the graph and for its complement")
for q in (2, 3, 5, 7):
    g = rl.singer_graph(q)
    lab = rl.singer_label_erq(q)
    clab = rl.singer_label_erq_complement(q)
    print(f"  q={q}: span {lab.span} on the graph, span {clab.span} on the "
          f"complement (both = q^2+q+1 = {g.n}, both verified:"
          f" {rl.verify(g, lab) == [] and rl.verify(rl.complement(g), clab) == []})")

print()
print("walking the q=3 construction explicitly:")
lab = rl.singer_label_erq(3)
order = sorted(range(13), key=lambda v: lab.labels[v])
ds = rl.singer_difference_set(3)
sums = [(order[i] + order[i + 1]) % 13 for i in range(12)]
print(f"  path: {order}")
print(f"  consecutive sums mod 13: {sums}")
print(f"  difference set: {set(ds.elements)}; sums avoid it: "
      f"{not (set(sums) & set(ds.elements))}")

print()
print("McKay-Miller-Siran graphs: diameter-2, within a constant factor of")
print("the Moore bound, and radio graceful by the bounded-degree rule")
g = rl.mms_graph(5)
verdict = rl.analyze(g)
print(f"  q=5: n={g.n}, degree {rl.regularity(g)}, diameter {rl.diameter(g)}, "
      f"{verdict.status} with span {verdict.certificate.span}")
m13 = rl.mms_graph(13)
print(f"  q=13: n={m13.n}, degree {rl.regularity(m13)} (construction scales)")
