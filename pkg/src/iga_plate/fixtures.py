"""Published benchmark values for the 11- and 34-layer cross-ply plates.

Each record holds normalized out-of-plane stresses at one sampling point
for one method: the 3D elasticity reference (``analytic``), recovered
Galerkin results (``galerkin``) and recovered collocation results
(``collocation``).  Values are stored exactly as printed (4 decimals).
Difference columns are in percent; a trailing ``*`` marks an absolute
difference used where the reference value is zero.

Coordinates are fractions: ``x1/L, x2/L, x3/t``.  Shear stresses in these
records are scaled by ``sigma0`` only (see ``reference.normalize``).
"""

# layers S x1 x2 x3 method s13 s23 s33 d13 d23 d33
RAW = """
11 20 0.00 0.50 0.00 analytic      4.0728   0.0000   0.0000        -        -        -
11 20 0.00 0.50 0.00 galerkin      3.9290   0.0000   0.0001   3.5295  0.0000*  0.0055*
11 20 0.00 0.50 0.00 collocation   3.7848   0.0000   0.0001   7.0706  0.0000*  0.0100*
11 30 0.00 0.50 0.00 analytic      6.0598   0.0000   0.0000        -        -        -
11 30 0.00 0.50 0.00 galerkin      5.8935   0.0000   0.0001   2.7445  0.0000*  0.0055*
11 30 0.00 0.50 0.00 collocation   5.6772   0.0000   0.0001   6.3145  0.0000*  0.0100*
11 40 0.00 0.50 0.00 analytic      8.0545   0.0000   0.0000        -        -        -
11 40 0.00 0.50 0.00 galerkin      7.8580   0.0000   0.0001   2.4395  0.0000*  0.0055*
11 40 0.00 0.50 0.00 collocation   7.5696   0.0000   0.0001   6.0206  0.0000*  0.0100*
11 50 0.00 0.50 0.00 analytic     10.0530   0.0000   0.0000        -        -        -
11 50 0.00 0.50 0.00 galerkin      9.8225   0.0000  -0.0001   2.2923  0.0000*  0.0055*
11 50 0.00 0.50 0.00 collocation   9.4620   0.0000   0.0001   5.8789  0.0000*  0.0100*
11 20 0.00 0.50 0.25 analytic      2.7527   0.0000   0.0000        -        -        -
11 20 0.00 0.50 0.25 galerkin      2.6394   0.0000  -0.0045   4.1167  0.0000*  0.4464*
11 20 0.00 0.50 0.25 collocation   2.5433   0.0000  -0.0082   7.6056  0.0000*  0.8161*
11 30 0.00 0.50 0.25 analytic      4.0817   0.0000   0.0000        -        -        -
11 30 0.00 0.50 0.25 galerkin      3.9590   0.0000  -0.0045   3.0059  0.0000*  0.4464*
11 30 0.00 0.50 0.25 collocation   3.8150   0.0000  -0.0082   6.5352  0.0000*  0.8161*
11 40 0.00 0.50 0.25 analytic      5.4188   0.0000   0.0000        -        -        -
11 40 0.00 0.50 0.25 galerkin      5.2787   0.0000  -0.0045   2.5849  0.0000*  0.4464*
11 40 0.00 0.50 0.25 collocation   5.0866   0.0000  -0.0082   6.1295  0.0000*  0.8161*
11 50 0.00 0.50 0.25 analytic      6.7595   0.0000   0.0000        -        -        -
11 50 0.00 0.50 0.25 galerkin      6.5984   0.0000  -0.0045   2.3838  0.0000*  0.4464*
11 50 0.00 0.50 0.25 collocation   6.3583   0.0000  -0.0082   5.9357  0.0000*  0.8161*
11 20 0.25 0.25 0.00 analytic      2.0364   2.7220   0.2483        -        -        -
11 20 0.25 0.25 0.00 galerkin      1.9974   2.7240   0.2483   1.9166   0.0751   0.0026
11 20 0.25 0.25 0.00 collocation   1.9919   2.7183   0.2483   2.1852   0.1340   0.0080
11 30 0.25 0.25 0.00 analytic      3.0299   4.1212   0.2483        -        -        -
11 30 0.25 0.25 0.00 galerkin      2.9960   4.0860   0.2483   1.1185   0.8526   0.0000
11 30 0.25 0.25 0.00 collocation   2.9878   4.0775   0.2483   1.3893   1.0598   0.0054
11 40 0.25 0.25 0.00 analytic      4.0273   5.5138   0.2483        -        -        -
11 40 0.25 0.25 0.00 galerkin      3.9947   5.4481   0.2483   0.8083   1.1926   0.0003
11 40 0.25 0.25 0.00 collocation   3.9838   5.4367   0.2483   1.0800   1.3991   0.0051
11 50 0.25 0.25 0.00 analytic      5.0265   6.9035   0.2483        -        -        -
11 50 0.25 0.25 0.00 galerkin      4.9934   6.8101   0.2483   0.6588   1.3529   0.0004
11 50 0.25 0.25 0.00 collocation   4.9797   6.7958   0.2483   0.9308   1.5591   0.0051
11 20 0.25 0.25 0.25 analytic      1.3763   2.2187   0.4209        -        -        -
11 20 0.25 0.25 0.25 galerkin      1.3415   2.2104   0.4213   2.5348   0.3720   0.0931
11 20 0.25 0.25 0.25 collocation   1.3375   2.2060   0.4202   2.8209   0.5713   0.1711
11 30 0.25 0.25 0.25 analytic      2.0409   3.3489   0.4211        -        -        -
11 30 0.25 0.25 0.25 galerkin      2.0122   3.3156   0.4213   1.4056   0.9939   0.0485
11 30 0.25 0.25 0.25 collocation   2.0063   3.3090   0.4202   1.6951   1.1921   0.2156
11 40 0.25 0.25 0.25 analytic      2.7094   4.4758   0.4212        -        -        -
11 40 0.25 0.25 0.25 galerkin      2.6829   4.4208   0.4213   0.9777   1.2278   0.0334
11 40 0.25 0.25 0.25 collocation   2.6750   4.4120   0.4202   1.2684   1.4255   0.2306
11 50 0.25 0.25 0.25 analytic      3.3798   5.6010   0.4212        -        -        -
11 50 0.25 0.25 0.25 galerkin      3.3536   5.5260   0.4213   0.7733   1.3392   0.0265
11 50 0.25 0.25 0.25 collocation   3.3438   5.5150   0.4202   1.0646   1.5366   0.2375
11 20 0.50 0.00 0.00 analytic      0.0000   5.4440   0.0000        -        -        -
11 20 0.50 0.00 0.00 galerkin      0.0000   5.3558   0.0001  0.0000*   1.6191  0.0057*
11 20 0.50 0.00 0.00 collocation   0.0000   5.1533   0.0001  0.0000*   5.3394  0.0106*
11 30 0.50 0.00 0.00 analytic      0.0000   8.2424   0.0000        -        -        -
11 30 0.50 0.00 0.00 galerkin      0.0000   8.0337   0.0001  0.0000*   2.5310  0.0057*
11 30 0.50 0.00 0.00 collocation   0.0000   7.7299   0.0001  0.0000*   6.2169  0.0106*
11 40 0.50 0.00 0.00 analytic      0.0000  11.0276   0.0000        -        -        -
11 40 0.50 0.00 0.00 galerkin      0.0000  10.7117   0.0001  0.0000*   2.8653  0.0057*
11 40 0.50 0.00 0.00 collocation   0.0000  10.3066   0.0001  0.0000*   6.5386  0.0106*
11 50 0.50 0.00 0.00 analytic      0.0000  13.8069   0.0000        -        -        -
11 50 0.50 0.00 0.00 galerkin      0.0000  13.3896   0.0001  0.0000*   3.0229  0.0057*
11 50 0.50 0.00 0.00 collocation   0.0000  12.8832   0.0001  0.0000*   6.6902  0.0106*
11 20 0.50 0.00 0.25 analytic      0.0000   4.4373   0.0000        -        -        -
11 20 0.50 0.00 0.25 galerkin      0.0000   4.3456  -0.0047  0.0000*   2.0680  0.4720*
11 20 0.50 0.00 0.25 collocation   0.0000   4.1806  -0.0087  0.0000*   5.7856  0.8691*
11 30 0.50 0.00 0.25 analytic      0.0000   6.6978   0.0000        -        -        -
11 30 0.50 0.00 0.25 galerkin      0.0000   6.5183  -0.0047  0.0000*   2.6794  0.4720*
11 30 0.50 0.00 0.25 collocation   0.0000   6.2709  -0.0087  0.0000*   6.3738  0.8691*
11 40 0.50 0.00 0.25 analytic      0.0000   8.9516   0.0000        -        -        -
11 40 0.50 0.00 0.25 galerkin      0.0000   8.6911  -0.0047  0.0000*   2.9094  0.4720*
11 40 0.50 0.00 0.25 collocation   0.0000   8.3612  -0.0087  0.0000*   6.5950  0.8691*
11 50 0.50 0.00 0.25 analytic      0.0000  11.2021   0.0000        -        -        -
11 50 0.50 0.00 0.25 galerkin      0.0000  10.8639  -0.0047  0.0000*   3.0188  0.4720*
11 50 0.50 0.00 0.25 collocation   0.0000  10.4515  -0.0087  0.0000*   6.7003  0.8691*
34 20 0.00 0.50 0.00 analytic      4.7476   0.0000   0.0000        -        -        -
34 20 0.00 0.50 0.00 galerkin      4.6422   0.0000   0.0000   2.2199  0.0000*  0.0019*
34 20 0.00 0.50 0.00 collocation   4.4689   0.0000   0.0000   5.8699  0.0000*  0.0034*
34 30 0.00 0.50 0.00 analytic      7.1411   0.0000   0.0000        -        -        -
34 30 0.00 0.50 0.00 galerkin      6.9633   0.0000   0.0000   2.4890  0.0000*  0.0019*
34 30 0.00 0.50 0.00 collocation   6.7034   0.0000   0.0000   6.1289  0.0000*  0.0034*
34 40 0.00 0.50 0.00 analytic      9.5307   0.0000   0.0000        -        -        -
34 40 0.00 0.50 0.00 galerkin      9.2844   0.0000   0.0000   2.5839  0.0000*  0.0019*
34 40 0.00 0.50 0.00 collocation   8.9378   0.0000   0.0000   6.2203  0.0000*  0.0034*
34 50 0.00 0.50 0.00 analytic     11.9187   0.0000   0.0000        -        -        -
34 50 0.00 0.50 0.00 galerkin     11.6055   0.0000   0.0000   2.6280  0.0000*  0.0019*
34 50 0.00 0.50 0.00 collocation  11.1723   0.0000   0.0000   6.2627  0.0000*  0.0034*
34 20 0.00 0.50 0.25 analytic      3.7058   0.0000   0.0000        -        -        -
34 20 0.00 0.50 0.25 galerkin      3.5969   0.0000  -0.0046   2.9384  0.0000*  0.4610*
34 20 0.00 0.50 0.25 collocation   3.4624   0.0000  -0.0085   6.5684  0.0000*  0.8461*
34 30 0.00 0.50 0.25 analytic      5.5563   0.0000   0.0000        -        -        -
34 30 0.00 0.50 0.25 galerkin      5.3954   0.0000  -0.0046   2.8963  0.0000*  0.4610*
34 30 0.00 0.50 0.25 collocation   5.1936   0.0000  -0.0085   6.5279  0.0000*  0.8461*
34 40 0.00 0.50 0.25 analytic      7.4073   0.0000   0.0000        -        -        -
34 40 0.00 0.50 0.25 galerkin      7.1938   0.0000  -0.0046   2.8821  0.0000*  0.4610*
34 40 0.00 0.50 0.25 collocation   6.9248   0.0000  -0.0085   6.5143  0.0000*  0.8461*
34 50 0.00 0.50 0.25 analytic      9.2585   0.0000   0.0000        -        -        -
34 50 0.00 0.50 0.25 galerkin      8.9923   0.0000  -0.0046   2.8757  0.0000*  0.4610*
34 50 0.00 0.50 0.25 collocation   8.6560   0.0000  -0.0085   6.5081  0.0000*  0.8461*
34 20 0.25 0.25 0.00 analytic      2.3738   2.3746   0.2494        -        -        -
34 20 0.25 0.25 0.00 galerkin      2.3606   2.3609   0.2494   0.5570   0.5767   0.0029
34 20 0.25 0.25 0.00 collocation   2.3550   2.3553   0.2495   0.7930   0.8127   0.0046
34 30 0.25 0.25 0.00 analytic      3.5705   3.5713   0.2494        -        -        -
34 30 0.25 0.25 0.00 galerkin      3.5409   3.5413   0.2494   0.8307   0.8404   0.0001
34 30 0.25 0.25 0.00 collocation   3.5325   3.5329   0.2495   1.0660   1.0757   0.0019
34 40 0.25 0.25 0.00 analytic      4.7653   4.7663   0.2494        -        -        -
34 40 0.25 0.25 0.00 galerkin      4.7212   4.7218   0.2494   0.9272   0.9332   0.0002
34 40 0.25 0.25 0.00 collocation   4.7099   4.7106   0.2495   1.1623   1.1683   0.0015
34 50 0.25 0.25 0.00 analytic      5.9594   5.9604   0.2494        -        -        -
34 50 0.25 0.25 0.00 galerkin      5.9014   5.9022   0.2494   0.9720   0.9763   0.0003
34 50 0.25 0.25 0.00 collocation   5.8874   5.8882   0.2495   1.2071   1.2113   0.0014
34 20 0.25 0.25 0.25 analytic      1.8529   1.7370   0.4212        -        -        -
34 20 0.25 0.25 0.25 galerkin      1.8291   1.7154   0.4217   1.2830   1.2387   0.1167
34 20 0.25 0.25 0.25 collocation   1.8249   1.7113   0.4206   1.5130   1.4777   0.1476
34 30 0.25 0.25 0.25 analytic      2.7782   2.6027   0.4215        -        -        -
34 30 0.25 0.25 0.25 galerkin      2.7437   2.5732   0.4217   1.2402   1.1343   0.0481
34 30 0.25 0.25 0.25 collocation   2.7373   2.5669   0.4206   1.4703   1.3735   0.2160
34 40 0.25 0.25 0.25 analytic      3.7037   3.4690   0.4216        -        -        -
34 40 0.25 0.25 0.25 galerkin      3.6583   3.4309   0.4217   1.2258   1.0978   0.0241
34 40 0.25 0.25 0.25 collocation   3.6497   3.4226   0.4206   1.4559   1.3371   0.2399
34 50 0.25 0.25 0.25 analytic      4.6293   4.3355   0.4217        -        -        -
34 50 0.25 0.25 0.25 galerkin      4.5728   4.2886   0.4217   1.2192   1.0809   0.0130
34 50 0.25 0.25 0.25 collocation   4.5622   4.2782   0.4206   1.4494   1.3203   0.2510
34 20 0.50 0.00 0.00 analytic      0.0000   4.7492   0.0000        -        -        -
34 20 0.50 0.00 0.00 galerkin      0.0000   4.6428   0.0000  0.0000*   2.2394  0.0018*
34 20 0.50 0.00 0.00 collocation   0.0000   4.4695   0.0000  0.0000*   5.8886  0.0032*
34 30 0.50 0.00 0.00 analytic      0.0000   7.1427   0.0000        -        -        -
34 30 0.50 0.00 0.00 galerkin      0.0000   6.9642   0.0000  0.0000*   2.4986  0.0018*
34 30 0.50 0.00 0.00 collocation   0.0000   6.7043   0.0000  0.0000*   6.1382  0.0032*
34 40 0.50 0.00 0.00 analytic      0.0000   9.5325   0.0000        -        -        -
34 40 0.50 0.00 0.00 galerkin      0.0000   9.2856   0.0000  0.0000*   2.5899  0.0018*
34 40 0.50 0.00 0.00 collocation   0.0000   8.9390   0.0000  0.0000*   6.2260  0.0032*
34 50 0.50 0.00 0.00 analytic      0.0000  11.9208   0.0000        -        -        -
34 50 0.50 0.00 0.00 galerkin      0.0000  11.6070   0.0000  0.0000*   2.6322  0.0018*
34 50 0.50 0.00 0.00 collocation   0.0000  11.1738   0.0000  0.0000*   6.2668  0.0032*
34 20 0.50 0.00 0.25 analytic      0.0000   3.4739   0.0000        -        -        -
34 20 0.50 0.00 0.25 galerkin      0.0000   3.3737  -0.0046  0.0000*   2.8853  0.4583*
34 20 0.50 0.00 0.25 collocation   0.0000   3.2480  -0.0084  0.0000*   6.5031  0.8413*
34 30 0.50 0.00 0.25 analytic      0.0000   5.2054   0.0000        -        -        -
34 30 0.50 0.00 0.25 galerkin      0.0000   5.0605  -0.0046  0.0000*   2.7826  0.4583*
34 30 0.50 0.00 0.25 collocation   0.0000   4.8720  -0.0084  0.0000*   6.4042  0.8413*
34 40 0.50 0.00 0.25 analytic      0.0000   6.9380   0.0000        -        -        -
34 40 0.50 0.00 0.25 galerkin      0.0000   6.7474  -0.0046  0.0000*   2.7468  0.4583*
34 40 0.50 0.00 0.25 collocation   0.0000   6.4960  -0.0084  0.0000*   6.3697  0.8413*
34 50 0.50 0.00 0.25 analytic      0.0000   8.6710   0.0000        -        -        -
34 50 0.50 0.00 0.25 galerkin      0.0000   8.4342  -0.0046  0.0000*   2.7302  0.4583*
34 50 0.50 0.00 0.25 collocation   0.0000   8.1200  -0.0084  0.0000*   6.3537  0.8413*
"""
