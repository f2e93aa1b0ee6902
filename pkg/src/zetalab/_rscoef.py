"""Chebyshev tables for the Riemann-Siegel correction terms.

Generated by scripts/gen_rs_coefficients.py; do not edit by hand.
Table j holds Chebyshev coefficients of the j-th correction on the
argument 2p - 1, p the fractional part of sqrt(t/2pi).
"""

import numpy as np

C0 = np.array([
    np.float64(0.6426672862397684),
    np.float64(-3.3746948645705113e-17),
    np.float64(0.27197299999785524),
    np.float64(2.941505491638406e-17),
    np.float64(0.010738605819340337),
    np.float64(6.015386941071387e-17),
    np.float64(-0.0013743815296336755),
    np.float64(2.4607408044365962e-17),
    np.float64(-0.00012468221880313068),
    np.float64(-5.984166774700934e-17),
    np.float64(-5.764599706209627e-07),
    np.float64(7.968863456953984e-17),
    np.float64(2.728067430496434e-07),
    np.float64(7.037356386518053e-17),
    np.float64(8.077953233340814e-09),
    np.float64(4.1548045230307404e-17),
    np.float64(-2.0884598414782505e-10),
    np.float64(5.1896082536631815e-17),
    np.float64(-1.311554731043768e-11),
    np.float64(-7.719026436670848e-17),
    np.float64(-1.4332537556905193e-14),
    np.float64(-8.310645174936096e-17),
    np.float64(9.993506874793458e-15),
    np.float64(-1.8416430334882854e-17),
    np.float64(6.198541443470889e-17),
    np.float64(2.1891775127963393e-16),
    np.float64(-8.24346216469242e-17),
    np.float64(3.007528113465846e-16),
    np.float64(-1.2887636926841574e-16),
    np.float64(3.4510616119294534e-16),
    np.float64(-5.604596150518572e-17),
    np.float64(3.490768588890013e-16),
    np.float64(-1.1562946374701252e-16),
    np.float64(2.067920295217048e-16),
    np.float64(-3.562221648183573e-16),
])

C1 = np.array([
    np.float64(-1.37141932366276e-18),
    np.float64(0.010697913921002996),
    np.float64(-3.2715656828057523e-18),
    np.float64(0.017170651243377882),
    np.float64(-5.5222914830477256e-18),
    np.float64(0.0027932111497884693),
    np.float64(-5.73133751816214e-18),
    np.float64(-3.6375653719275865e-05),
    np.float64(-1.3233030208650322e-17),
    np.float64(-2.7108955231149428e-05),
    np.float64(-5.394541535668817e-18),
    np.float64(-1.0483749866826229e-06),
    np.float64(-2.4533808443583424e-18),
    np.float64(5.8864671664379155e-08),
    np.float64(2.5114516625416975e-18),
    np.float64(4.322967261352797e-09),
    np.float64(-3.035224786525672e-18),
    np.float64(-1.1369599148824035e-11),
    np.float64(-1.5672670753939085e-18),
    np.float64(-6.699830752115155e-12),
    np.float64(8.528479857256953e-18),
    np.float64(-1.0080004282497714e-13),
    np.float64(8.161487765979692e-18),
    np.float64(5.1560757063739156e-15),
    np.float64(3.3964143825663906e-18),
    np.float64(1.4116277416068728e-16),
])

C2 = np.array([
    np.float64(0.0031461158539889122),
    np.float64(-9.038278945385732e-19),
    np.float64(-0.0023087838845307516),
    np.float64(2.084971884655223e-18),
    np.float64(5.7698207666896214e-05),
    np.float64(9.984403190371007e-19),
    np.float64(0.0003523886202366579),
    np.float64(1.3466712987031434e-18),
    np.float64(2.5246667458682046e-05),
    np.float64(1.1280523238662857e-18),
    np.float64(-3.4428211971941997e-06),
    np.float64(1.1594234252248962e-18),
    np.float64(-3.5350745566323413e-07),
    np.float64(-7.733796206083291e-19),
    np.float64(3.730830181855924e-09),
    np.float64(-3.6617054084382185e-19),
    np.float64(1.2776951842308265e-09),
    np.float64(-9.753124529527447e-19),
    np.float64(2.1874614055408776e-11),
    np.float64(9.749841909329949e-19),
    np.float64(-1.914142430214235e-12),
    np.float64(2.6596282207583544e-20),
    np.float64(-6.56295969070741e-14),
    np.float64(1.2945856733009208e-18),
    np.float64(1.2566666579129637e-15),
])

C3 = np.array([
    np.float64(2.142842693226789e-21),
    np.float64(7.123256221203878e-05),
    np.float64(1.4400750658528663e-19),
    np.float64(0.00023234305298164794),
    np.float64(1.415410929648919e-19),
    np.float64(-0.0001292991204547246),
    np.float64(1.5456597953931467e-19),
    np.float64(1.8074496413671423e-05),
    np.float64(9.883311167092383e-20),
    np.float64(6.526185187220429e-06),
    np.float64(1.2710712837820226e-19),
    np.float64(-1.1696365378523778e-07),
    np.float64(1.4338675641587783e-19),
    np.float64(-7.349476126518196e-08),
    np.float64(7.047134727294279e-20),
    np.float64(-1.7750910078064395e-09),
    np.float64(6.383777994768821e-20),
    np.float64(2.5555529603298684e-10),
    np.float64(3.812437237184597e-20),
    np.float64(1.1376636551496917e-11),
    np.float64(-2.5532752614327526e-20),
    np.float64(-3.3498646352620726e-13),
    np.float64(1.966253366279377e-20),
    np.float64(-2.5537361687850024e-14),
])

TABLES = (C0, C1, C2, C3)
