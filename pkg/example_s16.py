from tools import Format
from tools.catalog import abelian_group, build_16gamma2c1
from tools.gassmann import order_statistics, regular_pair_almost_conjugate
from tools.obstruction import s16_demo

# Z4+Z2+Z2 and 16Γ2c1 have the same number of elements of every order
statistics_h = order_statistics(abelian_group([4, 2, 2]))
statistics_k = order_statistics(build_16gamma2c1())
print(statistics_h, statistics_k)

# So their regular images in S16 meet every cycle type equally
verdict, certificate = regular_pair_almost_conjugate(statistics_h, statistics_k)
print(certificate)

# S(Z4+Z2+Z2) = 1 and S(16Γ2c1) = 0, so csinv(S16; identity) = 1
report = s16_demo()
print(report)

# The same report as json
print(report.dumps(Format.json))
