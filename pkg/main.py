from ffdistlab import (
    AmbientSpec,
    ExperimentConfig,
    PointSet,
    TheoremParams,
    energy_k,
    k_distance_set,
    max_affine_subspace,
    regular_audit,
    scan_thresholds,
    sphere,
    threshold_exponent,
)

plane = AmbientSpec.of(3, 2)
segment = PointSet.from_points(plane, [(0, 0), (1, 0)])
print("E_1..E_3 of a segment:", [energy_k(segment, k).value for k in (1, 2, 3)])

circle = sphere(plane, 1)
print("Delta_2 of the unit circle:", list(k_distance_set(circle.points, 2)))
print("Decay constant:", regular_audit(circle).decay_constant)

space = AmbientSpec.of(5, 3)
print("t_V of S_1 in F_5^3:", max_affine_subspace(sphere(space, 1)).t_V)

print("sphere-even-k3 exponent at d = 4:", threshold_exponent("sphere-even-k3", TheoremParams(d=4)))

config = ExperimentConfig(q=5, d=3, k=3, sizes=[2, 4, 8], sample_count=5, seed=1)
report = scan_thresholds(config)
for row in report.rows:
    print(row.size, row.min_delta, row.mean_delta, row.max_delta)
