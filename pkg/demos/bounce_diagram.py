"""Load voltage of a mismatched line driven by a step, against the steady state."""
from emlines.transient import TransientSetup, bounce, reflection_series, steady_state

setup = TransientSetup(10, 25, 50, 75, 1.0, 1e8)
print("successive wavefronts (V):", [round(v, 4) for v in reflection_series(setup, 6)])
v, i = bounce(setup, setup.length, 12 * setup.tau)
for k in range(1, 12, 2):
    t = (k + 0.5) * setup.tau
    print(f"t = {t * 1e9:6.1f} ns  V_load = {v.value_at(t):8.4f} V  I_load = {i.value_at(t):8.5f} A")
print("steady state (V, A):", steady_state(setup))
