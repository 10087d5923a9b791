"""Physical constants (CODATA 2022, SI units).

Pinned at build time so that fitted coefficients are reproducible; the
values are echoed into every run report.
"""

K_B = 1.380649e-23          # Boltzmann constant [J/K] (exact)
H_PLANCK = 6.62607015e-34   # Planck constant [J s] (exact)
MU_B = 9.2740100657e-24     # Bohr magneton [J/T]

CONSTANTS = {
    "k_B_J_per_K": K_B,
    "h_J_s": H_PLANCK,
    "mu_B_J_per_T": MU_B,
}
