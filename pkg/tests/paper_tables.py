"""Published reference values for the four tables (3-decimal precision;
tables 3 and 4 are Monte Carlo with stated accuracy +-0.001)."""

ALPHAS = (0.01, 0.05, 0.1, 0.3, 0.5, 0.7, 0.9, 0.95, 0.99)

# N -> (mu_N, cells); GUE with mu = sqrt(2N)
TABLE1 = {
    2: (2.000, (0.026, 0.087, 0.149, 0.359, 0.549, 0.732, 0.913, 0.958, 0.992)),
    5: (3.162, (0.017, 0.068, 0.125, 0.331, 0.526, 0.717, 0.907, 0.954, 0.991)),
    10: (4.472, (0.014, 0.061, 0.115, 0.319, 0.516, 0.711, 0.905, 0.953, 0.991)),
    25: (7.071, (0.012, 0.056, 0.108, 0.310, 0.509, 0.706, 0.902, 0.951, 0.991)),
    50: (10.000, (0.011, 0.054, 0.105, 0.307, 0.506, 0.704, 0.902, 0.951, 0.990)),
    75: (12.247, (0.011, 0.053, 0.104, 0.305, 0.504, 0.703, 0.901, 0.951, 0.990)),
    100: (14.142, (0.011, 0.052, 0.103, 0.304, 0.504, 0.702, 0.901, 0.951, 0.990)),
    200: (20.000, (0.011, 0.051, 0.102, 0.303, 0.502, 0.701, 0.901, 0.950, 0.990)),
    500: (31.623, (0.010, 0.051, 0.101, 0.301, 0.501, 0.701, 0.900, 0.950, 0.990)),
}

# N -> (mu_N, cells); GUE with the averaged centering
TABLE2 = {
    2: (1.984, (0.025, 0.083, 0.143, 0.349, 0.538, 0.723, 0.909, 0.955, 0.992)),
    5: (3.158, (0.017, 0.067, 0.123, 0.328, 0.523, 0.715, 0.906, 0.954, 0.991)),
    10: (4.471, (0.014, 0.061, 0.115, 0.318, 0.515, 0.710, 0.904, 0.952, 0.991)),
    25: (7.071, (0.012, 0.056, 0.108, 0.310, 0.508, 0.706, 0.902, 0.951, 0.990)),
    50: (10.000, (0.011, 0.054, 0.105, 0.306, 0.505, 0.704, 0.901, 0.951, 0.990)),
}

# N+1 -> cells; GOE Monte Carlo, theorem centering
TABLE3 = {
    2: (0.010, 0.045, 0.090, 0.279, 0.483, 0.698, 0.914, 0.963, 0.995),
    5: (0.012, 0.053, 0.103, 0.300, 0.500, 0.704, 0.907, 0.956, 0.993),
    10: (0.011, 0.053, 0.103, 0.302, 0.502, 0.703, 0.904, 0.954, 0.992),
    25: (0.011, 0.052, 0.103, 0.302, 0.502, 0.702, 0.902, 0.952, 0.991),
    50: (0.011, 0.052, 0.102, 0.301, 0.501, 0.701, 0.901, 0.951, 0.991),
    75: (0.011, 0.051, 0.102, 0.302, 0.501, 0.701, 0.901, 0.951, 0.990),
    100: (0.010, 0.051, 0.101, 0.301, 0.501, 0.701, 0.901, 0.951, 0.990),
    200: (0.011, 0.051, 0.101, 0.301, 0.501, 0.701, 0.901, 0.951, 0.990),
    500: (0.010, 0.050, 0.100, 0.300, 0.500, 0.700, 0.901, 0.951, 0.990),
}

# N+1 -> cells; GOE Monte Carlo, tuned centering (gamma=1/5, c=1)
TABLE4 = {
    2: (0.022, 0.073, 0.127, 0.319, 0.505, 0.696, 0.897, 0.950, 0.991),
    3: (0.018, 0.067, 0.120, 0.315, 0.505, 0.699, 0.899, 0.951, 0.991),
    4: (0.017, 0.063, 0.116, 0.311, 0.505, 0.699, 0.900, 0.951, 0.991),
    5: (0.015, 0.061, 0.114, 0.310, 0.504, 0.700, 0.901, 0.951, 0.991),
    10: (0.013, 0.056, 0.107, 0.305, 0.502, 0.700, 0.901, 0.951, 0.991),
    25: (0.011, 0.053, 0.104, 0.302, 0.501, 0.700, 0.901, 0.951, 0.990),
    50: (0.011, 0.052, 0.102, 0.301, 0.500, 0.699, 0.900, 0.950, 0.990),
    75: (0.011, 0.052, 0.102, 0.302, 0.500, 0.700, 0.900, 0.950, 0.990),
    100: (0.010, 0.051, 0.101, 0.301, 0.500, 0.700, 0.900, 0.951, 0.990),
    200: (0.011, 0.051, 0.101, 0.301, 0.500, 0.700, 0.900, 0.950, 0.990),
    500: (0.010, 0.050, 0.100, 0.300, 0.500, 0.700, 0.901, 0.951, 0.990),
}
