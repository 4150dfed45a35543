"""
First-law decomposition of quantum processes
============================================

This example demonstrates how to:
1. Split an isothermal coupling stroke into quantum work and quantum heat.
2. Check the limiting strokes: an isochor does no work, an isentrope moves
   no heat.

To run:
    python demos/05_work_heat_decomposition.py
"""

from qcaloric import (
    adiabatic_temperature_change,
    build_dimer,
    process_decompose,
)


def main():
    model = build_dimer(J=1.0, b=0.0, parameter="J")

    # 1. Isothermal stroke J: 0.5 -> 1.5 K at T = 1 K. Both the levels and
    # the populations move, so work and heat both flow; their sum closes the
    # first law against the endpoint energy difference.
    d = process_decompose(model, [(0.5, 1.0), (1.5, 1.0)])
    print("isothermal stroke J: 0.5 -> 1.5 K at T = 1 K")
    print(f"  work W  = {d.work:+.9f} K")
    print(f"  heat Q  = {d.heat:+.9f} K")
    print(f"  dU      = {d.energy_change:+.9f} K "
          f"(closure {abs(d.energy_change - d.work - d.heat):.1e})")

    # 2a. Isochor: lambda fixed, only the populations move -> W = 0 exactly.
    d = process_decompose(model, [(1.0, 0.5), (1.0, 2.5)])
    print("\nisochoric stroke T: 0.5 -> 2.5 K at J = 1 K")
    print(f"  work W  = {d.work:+.1e} K (exactly zero)")
    print(f"  heat Q  = {d.heat:+.9f} K = dU = {d.energy_change:+.9f} K")

    # 2b. Isentrope: follow the integrated adiabat, populations never move
    # -> Q -> 0 on refinement.
    adiabat = adiabatic_temperature_change(model, 0.5, 1.5, T_start=1.0)
    d = process_decompose(model, adiabat.path)
    print(f"\nadiabatic stroke J: 0.5 -> 1.5 K from T = 1 K "
          f"(T ends at {1.0 + adiabat.value:.6f} K)")
    print(f"  work W  = {d.work:+.9f} K = dU = {d.energy_change:+.9f} K")
    print(f"  heat Q  = {d.heat:+.1e} K")


if __name__ == "__main__":
    main()
