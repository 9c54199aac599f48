"""Parse expressions, evaluate them, and read off the lift descriptor.

Successive tensor products give an isobaric sum whose Levi blocks are the
dimensions of its pieces.
"""

from symlift import lift, parse, render

for src in ["sym^2(pi)*sym^3(pi)", "pi*pi*pi", "(pi + sym^2(pi)) * sym^3(pi)", "dual(pi) * det"]:
    d = lift(src)
    print(render(parse(src)))
    print(f"  degree {d.total_degree}, blocks {list(d.levi_blocks)}")
    print(f"  arithmetic: {d.constituents.as_tuples()}")
    print(f"  unitary:    {d.unitary_constituents}")
