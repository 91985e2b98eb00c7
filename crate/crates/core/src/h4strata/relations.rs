//! Published relations among J2..J10 cutting out each closed stratum, written
//! as `sum of terms = 0` with the left-hand-side monomial first.

use super::{t, Relation};

pub(super) static CUBIC: &[Relation] = &[
    Relation {
        terms: &[t(3.0, &[4]), t(-1.0, &[2, 2])],
    },
    Relation {
        terms: &[t(1.0, &[5])],
    },
    Relation {
        terms: &[t(30.0, &[3, 3]), t(-1.0, &[2, 2, 2])],
    },
    Relation {
        terms: &[t(9.0, &[6]), t(-1.0, &[2, 2, 2])],
    },
    Relation {
        terms: &[t(1.0, &[7])],
    },
    Relation {
        terms: &[t(1.0, &[8])],
    },
    Relation {
        terms: &[t(1.0, &[9])],
    },
    Relation {
        terms: &[t(1.0, &[10])],
    },
];

pub(super) static TRANSVERSE: &[Relation] = &[
    Relation {
        terms: &[t(98.0, &[4]), t(-41.0, &[2, 2])],
    },
    Relation {
        terms: &[t(63.0, &[5]), t(-25.0, &[2, 3])],
    },
    Relation {
        terms: &[t(3430.0, &[3, 3]), t(-81.0, &[2, 2, 2])],
    },
    Relation {
        terms: &[t(1372.0, &[6]), t(-283.0, &[2, 2, 2])],
    },
    Relation {
        terms: &[t(882.0, &[7]), t(-275.0, &[2, 2, 3])],
    },
    Relation {
        terms: &[t(4802.0, &[8]), t(-165.0, &[2, 2, 2, 2])],
    },
    Relation {
        terms: &[t(12348.0, &[9]), t(-3025.0, &[2, 2, 2, 3])],
    },
    Relation {
        terms: &[t(67228.0, &[10]), t(-1815.0, &[2, 2, 2, 2, 2])],
    },
];

pub(super) static TRIGONAL: &[Relation] = &[
    Relation {
        terms: &[
            t(192.0, &[6]),
            t(51.0, &[2, 2, 2]),
            t(-216.0, &[2, 4]),
            t(-10.0, &[3, 3]),
        ],
    },
    Relation {
        terms: &[
            t(36.0, &[7]),
            t(2.0, &[2, 2, 3]),
            t(-27.0, &[2, 5]),
            t(-6.0, &[3, 4]),
        ],
    },
    Relation {
        terms: &[
            t(768.0, &[4, 4]),
            t(99.0, &[2, 2, 2, 2]),
            t(-552.0, &[2, 2, 4]),
            t(-10.0, &[2, 3, 3]),
            t(-240.0, &[3, 5]),
        ],
    },
    Relation {
        terms: &[
            t(240.0, &[8]),
            t(33.0, &[2, 2, 2, 2]),
            t(-96.0, &[2, 2, 4]),
            t(-30.0, &[2, 3, 3]),
            t(-40.0, &[3, 5]),
        ],
    },
    Relation {
        terms: &[
            t(576.0, &[4, 5]),
            t(41.0, &[2, 2, 2, 3]),
            t(-216.0, &[2, 2, 5]),
            t(-120.0, &[2, 3, 4]),
            t(-30.0, &[3, 3, 3]),
        ],
    },
    Relation {
        terms: &[
            t(1152.0, &[9]),
            t(99.0, &[2, 2, 2, 3]),
            t(-648.0, &[2, 2, 5]),
            t(-296.0, &[2, 3, 4]),
            t(-10.0, &[3, 3, 3]),
        ],
    },
    Relation {
        terms: &[
            t(1440.0, &[5, 5]),
            t(11.0, &[2, 2, 2, 2, 2]),
            t(-32.0, &[2, 2, 2, 4]),
            t(70.0, &[2, 2, 3, 3]),
            t(-240.0, &[2, 3, 5]),
            t(-240.0, &[3, 3, 4]),
        ],
    },
    Relation {
        terms: &[
            t(8640.0, &[10]),
            t(891.0, &[2, 2, 2, 2, 2]),
            t(-2592.0, &[2, 2, 2, 4]),
            t(-730.0, &[2, 2, 3, 3]),
            t(-2160.0, &[2, 3, 5]),
            t(-240.0, &[3, 3, 4]),
        ],
    },
];

pub(super) static TETRAGONAL: &[Relation] = &[
    Relation {
        terms: &[
            t(6.0, &[6]),
            t(3.0, &[2, 2, 2]),
            t(-9.0, &[2, 4]),
            t(-20.0, &[3, 3]),
        ],
    },
    Relation {
        terms: &[
            t(3.0, &[7]),
            t(-1.0, &[2, 2, 3]),
            t(-3.0, &[2, 5]),
            t(3.0, &[3, 4]),
        ],
    },
    Relation {
        terms: &[
            t(6.0, &[4, 4]),
            t(3.0, &[2, 2, 2, 2]),
            t(-9.0, &[2, 2, 4]),
            t(-20.0, &[2, 3, 3]),
            t(20.0, &[3, 5]),
        ],
    },
    Relation {
        terms: &[
            t(5.0, &[8]),
            t(3.0, &[2, 2, 2, 2]),
            t(-6.0, &[2, 2, 4]),
            t(-30.0, &[2, 3, 3]),
            t(5.0, &[3, 5]),
        ],
    },
    Relation {
        terms: &[
            t(3.0, &[4, 5]),
            t(-7.0, &[2, 2, 2, 3]),
            t(-3.0, &[2, 2, 5]),
            t(15.0, &[2, 3, 4]),
            t(60.0, &[3, 3, 3]),
        ],
    },
    Relation {
        terms: &[
            t(6.0, &[9]),
            t(-5.0, &[2, 2, 2, 3]),
            t(-6.0, &[2, 2, 5]),
            t(13.0, &[2, 3, 4]),
            t(20.0, &[3, 3, 3]),
        ],
    },
    Relation {
        terms: &[
            t(5.0, &[5, 5]),
            t(2.0, &[2, 2, 2, 2, 2]),
            t(-4.0, &[2, 2, 2, 4]),
            t(-10.0, &[2, 2, 3, 3]),
            t(20.0, &[2, 3, 5]),
            t(-30.0, &[3, 3, 4]),
        ],
    },
    Relation {
        terms: &[
            t(15.0, &[10]),
            t(9.0, &[2, 2, 2, 2, 2]),
            t(-18.0, &[2, 2, 2, 4]),
            t(-85.0, &[2, 2, 3, 3]),
            t(30.0, &[2, 3, 5]),
            t(-15.0, &[3, 3, 4]),
        ],
    },
];

pub(super) static ORTHOTROPIC: &[Relation] = &[
    Relation {
        terms: &[
            t(1350.0, &[3, 7]),
            t(-84.0, &[2, 2, 2, 2, 2]),
            t(564.0, &[2, 2, 2, 4]),
            t(-70.0, &[2, 2, 3, 3]),
            t(-465.0, &[2, 2, 6]),
            t(-720.0, &[2, 3, 5]),
            t(-747.0, &[2, 4, 4]),
            t(170.0, &[3, 3, 4]),
            t(840.0, &[4, 6]),
            t(-270.0, &[5, 5]),
        ],
    },
    Relation {
        terms: &[
            t(1620.0, &[4, 7]),
            t(312.0, &[2, 2, 2, 2, 3]),
            t(549.0, &[2, 2, 2, 5]),
            t(-1638.0, &[2, 2, 3, 4]),
            t(-810.0, &[2, 2, 7]),
            t(80.0, &[2, 3, 3, 3]),
            t(1110.0, &[2, 3, 6]),
            t(-999.0, &[2, 4, 5]),
            t(-960.0, &[3, 3, 5]),
            t(972.0, &[3, 4, 4]),
            t(-360.0, &[5, 6]),
        ],
    },
    Relation {
        terms: &[
            t(4050.0, &[5, 7]),
            t(1350.0, &[2, 2, 2, 2, 2, 2]),
            t(-9018.0, &[2, 2, 2, 2, 4]),
            t(3270.0, &[2, 2, 2, 3, 3]),
            t(7965.0, &[2, 2, 2, 6]),
            t(10530.0, &[2, 2, 3, 5]),
            t(11259.0, &[2, 2, 4, 4]),
            t(-12330.0, &[2, 3, 3, 4]),
            t(-25650.0, &[2, 3, 7]),
            t(-14310.0, &[2, 4, 6]),
            t(400.0, &[3, 3, 3, 3]),
            t(9600.0, &[3, 3, 6]),
            t(9450.0, &[3, 4, 5]),
            t(1134.0, &[4, 4, 4]),
        ],
    },
    Relation {
        terms: &[
            t(12150.0, &[2, 3, 7]),
            t(-576.0, &[2, 2, 2, 2, 2, 2]),
            t(4104.0, &[2, 2, 2, 2, 4]),
            t(-2580.0, &[2, 2, 2, 3, 3]),
            t(-4410.0, &[2, 2, 2, 6]),
            t(-3645.0, &[2, 2, 3, 5]),
            t(-5670.0, &[2, 2, 4, 4]),
            t(10710.0, &[2, 3, 3, 4]),
            t(11610.0, &[2, 4, 6]),
            t(-400.0, &[3, 3, 3, 3]),
            t(-9750.0, &[3, 3, 6]),
            t(-8505.0, &[3, 4, 5]),
            t(-1458.0, &[4, 4, 4]),
            t(-3600.0, &[6, 6]),
        ],
    },
    Relation {
        terms: &[
            t(1800.0, &[6, 7]),
            t(-2160.0, &[2, 2, 2, 2, 2, 3]),
            t(-3483.0, &[2, 2, 2, 2, 5]),
            t(11946.0, &[2, 2, 2, 3, 4]),
            t(4950.0, &[2, 2, 2, 7]),
            t(-720.0, &[2, 2, 3, 3, 3]),
            t(-8370.0, &[2, 2, 3, 6]),
            t(7371.0, &[2, 2, 4, 5]),
            t(2880.0, &[2, 3, 3, 5]),
            t(-9216.0, &[2, 3, 4, 4]),
            t(-10800.0, &[2, 4, 7]),
            t(640.0, &[3, 3, 3, 4]),
            t(4800.0, &[3, 3, 7]),
            t(4020.0, &[3, 4, 6]),
            t(162.0, &[4, 4, 5]),
        ],
    },
    Relation {
        terms: &[
            t(60750.0, &[7, 7]),
            t(22221.0, &[2, 2, 2, 2, 2, 2, 2]),
            t(-148014.0, &[2, 2, 2, 2, 2, 4]),
            t(102000.0, &[2, 2, 2, 2, 3, 3]),
            t(137025.0, &[2, 2, 2, 2, 6]),
            t(223560.0, &[2, 2, 2, 3, 5]),
            t(177660.0, &[2, 2, 2, 4, 4]),
            t(-438390.0, &[2, 2, 3, 3, 4]),
            t(-546750.0, &[2, 2, 3, 7]),
            t(-246780.0, &[2, 2, 4, 6]),
            t(17200.0, &[2, 3, 3, 3, 3]),
            t(348000.0, &[2, 3, 3, 6]),
            t(116640.0, &[2, 3, 4, 5]),
            t(29808.0, &[2, 4, 4, 4]),
            t(-75600.0, &[3, 3, 3, 5]),
            t(82170.0, &[3, 3, 4, 4]),
            t(178200.0, &[3, 4, 7]),
            t(3780.0, &[4, 4, 6]),
        ],
    },
];
