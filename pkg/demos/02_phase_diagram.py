# coding: utf-8

# # The phase diagram of a group action
#
# A reflection acting on the boundary of a square has two kinds of points:
# the two vertices on the mirror axis (full C2 isotropy) and everything
# else (trivial isotropy).  The phase diagram records one object per
# (subgroup class, fixed-point component) pair and one arrow whenever a
# component degenerates onto a more symmetric one.
#
#     python3 demos/02_phase_diagram.py

from phasecat import (build_phase_diagram, export_dot, export_olog,
                      fixtures, olog_json, quotient_functor)

# The bundled fixture: C2 acts on the square boundary 0-1-2-3 by the
# reflection fixing vertices 0 and 2 and swapping 1 and 3.

c2 = fixtures.load_group("c2")
square = fixtures.load_complex("square_reflection", c2)

phase = build_phase_diagram(c2, square)
print("phase objects:")
for i, obj in enumerate(phase.objects):
    cls = phase.orbit.classes[obj.subgroup_class]
    print(f"  {obj.label}: isotropy order {cls.order}, "
          f"|Aut| = {phase.aut_orders[i]}")

# Three objects: one big component with trivial isotropy (whose residual
# symmetry still flips it, hence |Aut| = 2) and the two mirror vertices.
# The two non-identity arrows point from the generic phase into each
# symmetric one -- arrows go toward larger symmetry.

print("\nDOT diagram:\n")
print(export_dot(phase.category, phase))

# The quotient functor sends every point of the square to its phase.

qf = quotient_functor(phase)
print("vertex -> phase object:")
for v in range(square.vertex_count):
    print(f"  vertex {v} -> {phase.objects[qf.vertex_object[v]].label}")

# The whole category also serializes as an olog-style schema: objects,
# arrows, and explicit composition facts, ready for a plain database.

print("\nolog export (truncated):")
text = olog_json(export_olog(phase.category, phase))
print("\n".join(text.splitlines()[:20]))
print("  ...")
