"""Embedded numerical constant tables.

Chebyshev coefficient sets for the scaled modified Bessel seed functions
(generated offline with 60-digit arithmetic and verified against direct
high-precision evaluation to < 1e-15 relative in double precision), plus
the 12-point Gauss-Legendre rule used by the panel quadrature.

Clenshaw convention: value = sum_k c_k T_k(t), t in [-1, 1], c_0 not halved.
"""

I0E_SMALL = (
    0.3383976372047380425,
    -0.30468267234319839868,
    0.17162090152220877535,
    -0.094901097048047644421,
    0.049305284239670708488,
    -0.023737414805899468816,
    0.010546460394594998318,
    -0.0043243099950505759443,
    0.0016394756169413357984,
    -0.00057637557453858236588,
    0.00018850288509584165573,
    -0.00005754195010082103704,
    0.000016448448070728897089,
    -4.4167383584587505636e-6,
    1.1173875391201037182e-6,
    -2.6707938539406117339e-7,
    6.0469950225419189493e-8,
    -1.3000250099862480421e-8,
    2.6598237246823866503e-9,
    -5.1897956016352629067e-10,
    9.6758090353732369122e-11,
    -1.7268262914415557072e-11,
    2.9550526631296398346e-12,
    -4.8564467831119294609e-13,
    7.6761854986049356169e-14,
    -1.1685332877993451681e-14,
    1.7153912855551330306e-15,
    -2.4312798465479546936e-16,
    3.3307945188222380978e-17,
    -4.4153416464793393795e-18,
    5.6691780069214961571e-19,
)

I0E_LARGE = (
    0.4022452055070544158,
    0.0033691164782556940899,
    0.000068897583469168239843,
    2.891370520834756483e-6,
    2.0489185894690637418e-7,
    2.2666689904981780646e-8,
    3.3962320257083863452e-9,
    4.9406023882249695891e-10,
    1.1889147107846438342e-11,
    -3.1499165279632413645e-11,
    -1.3215811840447713119e-11,
    -1.7941785315068061178e-12,
    7.1801244513836662335e-13,
    3.8527783827421427027e-13,
    1.5400862175214098053e-14,
    -4.1505693472872221055e-14,
    -9.5548466988283065464e-15,
    3.8116806693526211832e-15,
    1.7725601330565245254e-15,
    -3.4254856196771422127e-16,
    -2.8276239805166456159e-16,
    3.4612228676956577865e-17,
    4.4656214203020774971e-17,
    -4.8305044859640107366e-18,
    -7.2331804880438443156e-18,
    9.9214754156570379797e-19,
    1.1936508909418692907e-18,
    -2.4887098521860109839e-19,
    -1.938426434547792837e-19,
)

I1E_LARGE = (
    0.38928811750914006024,
    -0.0097610974913614684078,
    -0.00011058893876262371629,
    -3.8825648088776903935e-6,
    -2.5122362378702089253e-7,
    -2.6314688468895195068e-8,
    -3.835380385964237022e-9,
    -5.5897434621965838069e-10,
    -1.8974958123505412345e-11,
    3.2526035830154882386e-11,
    1.4125807436613781332e-11,
    2.0356285441470895073e-12,
    -7.1985517762459085119e-13,
    -4.0835511110921973198e-13,
    -2.1015418427726642907e-14,
    4.2724400167119513724e-14,
    1.042027698412880165e-14,
    -3.8144030724370065171e-15,
    -1.8803547755107806319e-15,
    3.3082023109208502126e-16,
    2.9626289976460157939e-16,
    -3.2095259219916368904e-17,
    -4.6503053684947828607e-17,
    4.4143483230939369749e-18,
    7.5172963110113977073e-18,
    -9.3141788709072627305e-19,
    -1.2421932752759927671e-18,
    2.4142767346412148072e-19,
    2.0269443636103562539e-19,
)

K0E_SMALL = (
    -0.26766369661695138436,
    0.34428989992462848689,
    0.035979936515361501627,
    0.0012646154114469259234,
    0.000022862121031194517861,
    2.5347910790261494573e-7,
    1.904516377220208859e-9,
    1.0349695257633624585e-11,
    4.2598161427910825765e-14,
    1.3744654358807508969e-16,
    3.570896528508373591e-19,
)

K0E_LARGE = (
    1.2201515410329777273,
    -0.031448101311964500543,
    0.0015698838857300533749,
    -0.00012849549581627802638,
    0.000013949813718876499364,
    -1.8317555227191194848e-6,
    2.7668136394450150761e-7,
    -4.6604898976879476656e-8,
    8.5740340174142260858e-9,
    -1.6975345093890615156e-9,
    3.5773972814003284472e-10,
    -7.9574892444773970377e-11,
    1.855949114954926555e-11,
    -4.5145978833745191751e-12,
    1.1403405882073442347e-12,
    -2.9800969231481783548e-13,
    8.0328907750683743694e-14,
    -2.2275133267462963604e-14,
    6.3400764762766459661e-15,
    -1.8485933779209071694e-15,
    5.5120559994043333647e-16,
    -1.678231125754900638e-16,
    5.2103917776435541049e-17,
    -1.6475805939842632646e-17,
    5.3004337711773353938e-18,
    -1.7331712005820991834e-18,
    5.7551092028827103942e-19,
    -1.9390956053183125913e-19,
)

K1E_SMALL = (
    -0.23734988633052611473,
    -0.35315596077654487567,
    -0.12261118082265714823,
    -0.0069757238596398643502,
    -0.0001730288957513052063,
    -2.433406141565968235e-6,
    -2.2133876307347258558e-8,
    -1.4114883926335277611e-10,
    -6.6669016941993290061e-13,
    -2.4274498505193659339e-15,
    -7.0238634793862875972e-18,
)

K1E_LARGE = (
    1.3603130952422213347,
    0.10392373657681723844,
    -0.0028578168596227793868,
    0.00019521551847135163111,
    -0.0000193619797416608296,
    2.4064849478372171171e-6,
    -3.5019606030878125421e-7,
    5.7410841254500492923e-8,
    -1.0345762465678097027e-8,
    2.0150497551970346161e-9,
    -4.1903547593419255842e-10,
    9.2183151876053141258e-11,
    -2.1299678384277910216e-11,
    5.1396396734823435404e-12,
    -1.2891739609498229352e-12,
    3.3484196660522431201e-13,
    -8.9767051820101460692e-14,
    2.4771544242195986813e-14,
    -7.0198370892147688513e-15,
    2.0387031662398608799e-15,
    -6.0570472706430178226e-16,
    1.8380935752430454252e-16,
    -5.6894628491936483663e-17,
    1.7940510478863572738e-17,
    -5.7567444820733020572e-18,
    1.8778651901623258597e-18,
    -6.2216452873525893831e-19,
    2.0919125269830689141e-19,
)

I1E_SMALL_OVERX = (
    0.12629359322181682741,
    -0.17641651835783405515,
    0.10264365868984709538,
    -0.052945981208094991427,
    0.024726449030626516828,
    -0.010564084894626198156,
    0.0041564229443128881567,
    -0.001513572450631253149,
    0.0005122859561685757729,
    -0.00016176081582589674559,
    0.000047815651075500542264,
    -0.000013273163656039435828,
    3.4702513081376784767e-6,
    -8.5687202646954547407e-7,
    2.0032947535521352623e-7,
    -4.4450591287963280807e-8,
    9.3815373864957717839e-9,
    -1.8872497517228292879e-9,
    3.625590281552117037e-10,
    -6.6634897235020277422e-11,
    1.1736186298890901631e-11,
    -1.9839743977649437152e-12,
    3.2237933659455747098e-13,
    -5.0421855047279116871e-14,
    7.6006842947354069341e-15,
    -1.105596947735386308e-15,
    1.5536319577362004689e-16,
    -2.1114212143581660782e-17,
    2.7779141127610463705e-18,
    -3.5415817725421362052e-19,
)

# 12-point Gauss-Legendre rule on [-1, 1] (nodes symmetric, weights > 0).
GL12_NODES = (
    -0.9815606342467192,
    -0.9041172563704748,
    -0.7699026741943047,
    -0.5873179542866175,
    -0.3678314989981802,
    -0.1252334085114689,
    0.1252334085114689,
    0.3678314989981802,
    0.5873179542866175,
    0.7699026741943047,
    0.9041172563704748,
    0.9815606342467192,
)
GL12_WEIGHTS = (
    0.04717533638651202,
    0.10693932599531888,
    0.1600783285433461,
    0.20316742672306565,
    0.23349253653835464,
    0.2491470458134027,
    0.2491470458134027,
    0.23349253653835464,
    0.20316742672306565,
    0.1600783285433461,
    0.10693932599531888,
    0.04717533638651202,
)
