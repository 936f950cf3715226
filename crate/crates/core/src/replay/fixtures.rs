// Physics, top 20 universities by article count: averaged and summed
// normalized scores with their rank columns, at printed precision.

use super::{Col, FixtureRow, TableRow};

pub const PHYSICS_TOP20: [FixtureRow; 20] = [
    FixtureRow {
        no: "0001",
        name: "Universite Paris Saclay",
        articles: 2055,
        tc: 74509,
        tc_ave: 36.257,
        average: TableRow {
            rank0: 468,
            rank0_appendix: 468,
            mean: Col { score: 1.522, rank: 468, change: 0 },
            percentile: Col { score: 62.988, rank: 430, change: -38 },
            nlcs: Col { score: 1.21, rank: 439, change: -29 },
            log_z: Col { score: 2.423, rank: 439, change: -29 },
            median: Col { score: 3.296, rank: 468, change: 0 },
            z: Col { score: 0.578, rank: 468, change: 0 },
        },
        sum: TableRow {
            rank0: 1,
            rank0_appendix: 1,
            mean: Col { score: 3128.14, rank: 1, change: 0 },
            percentile: Col { score: 129440.623, rank: 1, change: 0 },
            nlcs: Col { score: 2486.27, rank: 1, change: 0 },
            log_z: Col { score: 4979.641, rank: 1, change: 0 },
            median: Col { score: 6773.545, rank: 1, change: 0 },
            z: Col { score: 1187.292, rank: 1, change: 0 },
        },
    },
    FixtureRow {
        no: "0002",
        name: "University of Tokyo",
        articles: 1513,
        tc: 53795,
        tc_ave: 35.555,
        average: TableRow {
            rank0: 480,
            rank0_appendix: 480,
            mean: Col { score: 1.493, rank: 480, change: 0 },
            percentile: Col { score: 61.802, rank: 465, change: -15 },
            nlcs: Col { score: 1.191, rank: 470, change: -10 },
            log_z: Col { score: 2.385, rank: 470, change: -10 },
            median: Col { score: 3.232, rank: 480, change: 0 },
            z: Col { score: 0.567, rank: 480, change: 0 },
        },
        sum: TableRow {
            rank0: 5,
            rank0_appendix: 5,
            mean: Col { score: 2258.496, rank: 5, change: 0 },
            percentile: Col { score: 93506.659, rank: 2, change: -3 },
            nlcs: Col { score: 1801.46, rank: 2, change: -3 },
            log_z: Col { score: 3608.064, rank: 2, change: -3 },
            median: Col { score: 4890.455, rank: 5, change: 0 },
            z: Col { score: 857.217, rank: 5, change: 0 },
        },
    },
    FixtureRow {
        no: "0003",
        name: "Sorbonne Universite",
        articles: 1122,
        tc: 51408,
        tc_ave: 45.818,
        average: TableRow {
            rank0: 346,
            rank0_appendix: 346,
            mean: Col { score: 1.924, rank: 346, change: 0 },
            percentile: Col { score: 66.378, rank: 333, change: -13 },
            nlcs: Col { score: 1.272, rank: 341, change: -5 },
            log_z: Col { score: 2.547, rank: 341, change: -5 },
            median: Col { score: 4.165, rank: 346, change: 0 },
            z: Col { score: 0.73, rank: 346, change: 0 },
        },
        sum: TableRow {
            rank0: 6,
            rank0_appendix: 6,
            mean: Col { score: 2158.282, rank: 6, change: 0 },
            percentile: Col { score: 74475.941, rank: 4, change: -2 },
            nlcs: Col { score: 1427.052, rank: 4, change: -2 },
            log_z: Col { score: 2858.179, rank: 4, change: -2 },
            median: Col { score: 4673.455, rank: 6, change: 0 },
            z: Col { score: 819.181, rank: 6, change: 0 },
        },
    },
    FixtureRow {
        no: "0004",
        name: "University of Science & Technology of China, CAS",
        articles: 1115,
        tc: 38372,
        tc_ave: 34.414,
        average: TableRow {
            rank0: 502,
            rank0_appendix: 502,
            mean: Col { score: 1.445, rank: 502, change: 0 },
            percentile: Col { score: 55.327, rank: 650, change: 148 },
            nlcs: Col { score: 1.087, rank: 625, change: 123 },
            log_z: Col { score: 2.178, rank: 625, change: 123 },
            median: Col { score: 3.129, rank: 502, change: 0 },
            z: Col { score: 0.548, rank: 502, change: 0 },
        },
        sum: TableRow {
            rank0: 12,
            rank0_appendix: 12,
            mean: Col { score: 1610.986, rank: 12, change: 0 },
            percentile: Col { score: 61689.332, rank: 8, change: -4 },
            nlcs: Col { score: 1212.307, rank: 8, change: -4 },
            log_z: Col { score: 2428.075, rank: 8, change: -4 },
            median: Col { score: 3488.364, rank: 12, change: 0 },
            z: Col { score: 611.453, rank: 12, change: 0 },
        },
    },
    FixtureRow {
        no: "0005",
        name: "Massachusetts Institute of Technology (MIT)",
        articles: 1113,
        tc: 64914,
        tc_ave: 58.323,
        average: TableRow {
            rank0: 165,
            rank0_appendix: 165,
            mean: Col { score: 2.449, rank: 165, change: 0 },
            percentile: Col { score: 71.26, rank: 190, change: 25 },
            nlcs: Col { score: 1.379, rank: 180, change: 15 },
            log_z: Col { score: 2.763, rank: 180, change: 15 },
            median: Col { score: 5.302, rank: 165, change: 0 },
            z: Col { score: 0.929, rank: 165, change: 0 },
        },
        sum: TableRow {
            rank0: 2,
            rank0_appendix: 2,
            mean: Col { score: 2725.309, rank: 2, change: 0 },
            percentile: Col { score: 79312.442, rank: 3, change: 1 },
            nlcs: Col { score: 1535.14, rank: 3, change: 1 },
            log_z: Col { score: 3074.664, rank: 3, change: 1 },
            median: Col { score: 5901.273, rank: 2, change: 0 },
            z: Col { score: 1034.397, rank: 2, change: 0 },
        },
    },
    FixtureRow {
        no: "0006",
        name: "Tsinghua University",
        articles: 1111,
        tc: 39388,
        tc_ave: 35.453,
        average: TableRow {
            rank0: 482,
            rank0_appendix: 482,
            mean: Col { score: 1.488, rank: 482, change: 0 },
            percentile: Col { score: 58.198, rank: 572, change: 90 },
            nlcs: Col { score: 1.13, rank: 560, change: 78 },
            log_z: Col { score: 2.263, rank: 560, change: 78 },
            median: Col { score: 3.223, rank: 482, change: 0 },
            z: Col { score: 0.565, rank: 482, change: 0 },
        },
        sum: TableRow {
            rank0: 10,
            rank0_appendix: 10,
            mean: Col { score: 1653.642, rank: 10, change: 0 },
            percentile: Col { score: 64657.886, rank: 6, change: -4 },
            nlcs: Col { score: 1255.222, rank: 6, change: -4 },
            log_z: Col { score: 2514.028, rank: 6, change: -4 },
            median: Col { score: 3580.727, rank: 10, change: 0 },
            z: Col { score: 627.643, rank: 10, change: 0 },
        },
    },
    FixtureRow {
        no: "0007",
        name: "Peking University",
        articles: 1069,
        tc: 39782,
        tc_ave: 37.214,
        average: TableRow {
            rank0: 453,
            rank0_appendix: 453,
            mean: Col { score: 1.562, rank: 453, change: 0 },
            percentile: Col { score: 58.842, rank: 553, change: 100 },
            nlcs: Col { score: 1.139, rank: 543, change: 90 },
            log_z: Col { score: 2.282, rank: 543, change: 90 },
            median: Col { score: 3.383, rank: 453, change: 0 },
            z: Col { score: 0.593, rank: 453, change: 0 },
        },
        sum: TableRow {
            rank0: 9,
            rank0_appendix: 9,
            mean: Col { score: 1670.183, rank: 9, change: 0 },
            percentile: Col { score: 62902.223, rank: 7, change: -2 },
            nlcs: Col { score: 1217.968, rank: 7, change: -2 },
            log_z: Col { score: 2439.414, rank: 7, change: -2 },
            median: Col { score: 3616.545, rank: 9, change: 0 },
            z: Col { score: 633.922, rank: 9, change: 0 },
        },
    },
    FixtureRow {
        no: "0008",
        name: "University of California Berkeley",
        articles: 1005,
        tc: 60793,
        tc_ave: 60.491,
        average: TableRow {
            rank0: 143,
            rank0_appendix: 143,
            mean: Col { score: 2.54, rank: 143, change: 0 },
            percentile: Col { score: 69.984, rank: 228, change: 85 },
            nlcs: Col { score: 1.356, rank: 218, change: 75 },
            log_z: Col { score: 2.716, rank: 218, change: 75 },
            median: Col { score: 5.499, rank: 143, change: 0 },
            z: Col { score: 0.964, rank: 143, change: 0 },
        },
        sum: TableRow {
            rank0: 3,
            rank0_appendix: 3,
            mean: Col { score: 2552.296, rank: 3, change: 0 },
            percentile: Col { score: 70333.776, rank: 5, change: 2 },
            nlcs: Col { score: 1362.816, rank: 5, change: 2 },
            log_z: Col { score: 2729.525, rank: 5, change: 2 },
            median: Col { score: 5526.636, rank: 3, change: 0 },
            z: Col { score: 968.729, rank: 3, change: 0 },
        },
    },
    FixtureRow {
        no: "0009",
        name: "Lomonosov Moscow State University",
        articles: 999,
        tc: 33418,
        tc_ave: 33.451,
        average: TableRow {
            rank0: 513,
            rank0_appendix: 513,
            mean: Col { score: 1.404, rank: 513, change: 0 },
            percentile: Col { score: 54.498, rank: 672, change: 159 },
            nlcs: Col { score: 1.065, rank: 663, change: 150 },
            log_z: Col { score: 2.133, rank: 663, change: 150 },
            median: Col { score: 3.041, rank: 513, change: 0 },
            z: Col { score: 0.533, rank: 513, change: 0 },
        },
        sum: TableRow {
            rank0: 23,
            rank0_appendix: 23,
            mean: Col { score: 1403.001, rank: 23, change: 0 },
            percentile: Col { score: 54443.877, rank: 13, change: -10 },
            nlcs: Col { score: 1064.113, rank: 13, change: -10 },
            log_z: Col { score: 2131.264, rank: 13, change: -10 },
            median: Col { score: 3038.0, rank: 23, change: 0 },
            z: Col { score: 532.512, rank: 23, change: 0 },
        },
    },
    FixtureRow {
        no: "0010",
        name: "Universite Grenoble Alpes (UGA)",
        articles: 929,
        tc: 33126,
        tc_ave: 35.658,
        average: TableRow {
            rank0: 478,
            rank0_appendix: 478,
            mean: Col { score: 1.497, rank: 478, change: 0 },
            percentile: Col { score: 61.146, rank: 486, change: 8 },
            nlcs: Col { score: 1.182, rank: 486, change: 8 },
            log_z: Col { score: 2.367, rank: 486, change: 8 },
            median: Col { score: 3.242, rank: 478, change: 0 },
            z: Col { score: 0.568, rank: 478, change: 0 },
        },
        sum: TableRow {
            rank0: 24,
            rank0_appendix: 24,
            mean: Col { score: 1390.742, rank: 24, change: 0 },
            percentile: Col { score: 56804.441, rank: 12, change: -12 },
            nlcs: Col { score: 1097.674, rank: 11, change: -13 },
            log_z: Col { score: 2198.482, rank: 11, change: -13 },
            median: Col { score: 3011.455, rank: 24, change: 0 },
            z: Col { score: 527.859, rank: 24, change: 0 },
        },
    },
    FixtureRow {
        no: "0011",
        name: "Tohoku University",
        articles: 906,
        tc: 22014,
        tc_ave: 24.298,
        average: TableRow {
            rank0: 681,
            rank0_appendix: 681,
            mean: Col { score: 1.02, rank: 681, change: 0 },
            percentile: Col { score: 53.977, rank: 685, change: 4 },
            nlcs: Col { score: 1.048, rank: 688, change: 7 },
            log_z: Col { score: 2.1, rank: 688, change: 7 },
            median: Col { score: 2.209, rank: 681, change: 0 },
            z: Col { score: 0.387, rank: 681, change: 0 },
        },
        sum: TableRow {
            rank0: 62,
            rank0_appendix: 62,
            mean: Col { score: 924.222, rank: 62, change: 0 },
            percentile: Col { score: 48903.039, rank: 19, change: -43 },
            nlcs: Col { score: 949.852, rank: 19, change: -43 },
            log_z: Col { score: 1902.416, rank: 19, change: -43 },
            median: Col { score: 2001.273, rank: 62, change: 0 },
            z: Col { score: 350.791, rank: 62, change: 0 },
        },
    },
    FixtureRow {
        no: "0012",
        name: "University of Chinese Academy of Sciences, CAS",
        articles: 878,
        tc: 19736,
        tc_ave: 22.478,
        average: TableRow {
            rank0: 723,
            rank0_appendix: 723,
            mean: Col { score: 0.944, rank: 723, change: 0 },
            percentile: Col { score: 47.969, rank: 842, change: 119 },
            nlcs: Col { score: 0.954, rank: 828, change: 105 },
            log_z: Col { score: 1.911, rank: 828, change: 105 },
            median: Col { score: 2.043, rank: 723, change: 0 },
            z: Col { score: 0.358, rank: 723, change: 0 },
        },
        sum: TableRow {
            rank0: 77,
            rank0_appendix: 77,
            mean: Col { score: 828.584, rank: 77, change: 0 },
            percentile: Col { score: 42116.871, rank: 26, change: -51 },
            nlcs: Col { score: 837.794, rank: 24, change: -53 },
            log_z: Col { score: 1677.98, rank: 24, change: -53 },
            median: Col { score: 1794.182, rank: 77, change: 0 },
            z: Col { score: 314.491, rank: 77, change: 0 },
        },
    },
    FixtureRow {
        no: "0013",
        name: "University of Cambridge",
        articles: 870,
        tc: 38904,
        tc_ave: 44.717,
        average: TableRow {
            rank0: 360,
            rank0_appendix: 360,
            mean: Col { score: 1.877, rank: 360, change: 0 },
            percentile: Col { score: 68.923, rank: 262, change: -98 },
            nlcs: Col { score: 1.316, rank: 286, change: -74 },
            log_z: Col { score: 2.636, rank: 286, change: -74 },
            median: Col { score: 4.065, rank: 360, change: 0 },
            z: Col { score: 0.713, rank: 360, change: 0 },
        },
        sum: TableRow {
            rank0: 11,
            rank0_appendix: 11,
            mean: Col { score: 1633.322, rank: 11, change: 0 },
            percentile: Col { score: 59962.581, rank: 9, change: -2 },
            nlcs: Col { score: 1144.865, rank: 9, change: -2 },
            log_z: Col { score: 2293.0, rank: 9, change: -2 },
            median: Col { score: 3536.727, rank: 11, change: 0 },
            z: Col { score: 619.931, rank: 11, change: 0 },
        },
    },
    FixtureRow {
        no: "0014",
        name: "Kyoto University",
        articles: 861,
        tc: 28123,
        tc_ave: 32.663,
        average: TableRow {
            rank0: 523,
            rank0_appendix: 523,
            mean: Col { score: 1.371, rank: 523, change: 0 },
            percentile: Col { score: 59.264, rank: 544, change: 21 },
            nlcs: Col { score: 1.145, rank: 533, change: 10 },
            log_z: Col { score: 2.294, rank: 533, change: 10 },
            median: Col { score: 2.969, rank: 523, change: 0 },
            z: Col { score: 0.52, rank: 523, change: 0 },
        },
        sum: TableRow {
            rank0: 33,
            rank0_appendix: 33,
            mean: Col { score: 1180.699, rank: 33, change: 0 },
            percentile: Col { score: 51026.082, rank: 15, change: -18 },
            nlcs: Col { score: 986.271, rank: 15, change: -18 },
            log_z: Col { score: 1975.359, rank: 15, change: -18 },
            median: Col { score: 2556.636, rank: 33, change: 0 },
            z: Col { score: 448.137, rank: 33, change: 0 },
        },
    },
    FixtureRow {
        no: "0015",
        name: "Osaka University",
        articles: 835,
        tc: 24028,
        tc_ave: 28.776,
        average: TableRow {
            rank0: 590,
            rank0_appendix: 590,
            mean: Col { score: 1.208, rank: 590, change: 0 },
            percentile: Col { score: 56.843, rank: 607, change: 17 },
            nlcs: Col { score: 1.099, rank: 610, change: 20 },
            log_z: Col { score: 2.201, rank: 610, change: 20 },
            median: Col { score: 2.616, rank: 590, change: 0 },
            z: Col { score: 0.459, rank: 590, change: 0 },
        },
        sum: TableRow {
            rank0: 48,
            rank0_appendix: 48,
            mean: Col { score: 1008.777, rank: 48, change: 0 },
            percentile: Col { score: 47463.843, rank: 22, change: -26 },
            nlcs: Col { score: 917.425, rank: 22, change: -26 },
            log_z: Col { score: 1837.469, rank: 22, change: -26 },
            median: Col { score: 2184.364, rank: 48, change: 0 },
            z: Col { score: 382.883, rank: 48, change: 0 },
        },
    },
    FixtureRow {
        no: "0016",
        name: "Stanford University",
        articles: 809,
        tc: 59239,
        tc_ave: 73.225,
        average: TableRow {
            rank0: 49,
            rank0_appendix: 49,
            mean: Col { score: 3.074, rank: 49, change: 0 },
            percentile: Col { score: 71.04, rank: 202, change: 153 },
            nlcs: Col { score: 1.385, rank: 175, change: 126 },
            log_z: Col { score: 2.773, rank: 175, change: 126 },
            median: Col { score: 6.657, rank: 49, change: 0 },
            z: Col { score: 1.167, rank: 49, change: 0 },
        },
        sum: TableRow {
            rank0: 4,
            rank0_appendix: 4,
            mean: Col { score: 2487.054, rank: 4, change: 0 },
            percentile: Col { score: 57471.361, rank: 10, change: 6 },
            nlcs: Col { score: 1120.08, rank: 10, change: 6 },
            log_z: Col { score: 2243.359, rank: 10, change: 6 },
            median: Col { score: 5385.364, rank: 4, change: 0 },
            z: Col { score: 943.967, rank: 4, change: 0 },
        },
    },
    FixtureRow {
        no: "0017",
        name: "University of Oxford",
        articles: 803,
        tc: 46940,
        tc_ave: 58.456,
        average: TableRow {
            rank0: 161,
            rank0_appendix: 161,
            mean: Col { score: 2.454, rank: 161, change: 0 },
            percentile: Col { score: 71.039, rank: 203, change: 42 },
            nlcs: Col { score: 1.364, rank: 203, change: 42 },
            log_z: Col { score: 2.731, rank: 203, change: 42 },
            median: Col { score: 5.314, rank: 161, change: 0 },
            z: Col { score: 0.931, rank: 161, change: 0 },
        },
        sum: TableRow {
            rank0: 8,
            rank0_appendix: 8,
            mean: Col { score: 1970.7, rank: 8, change: 0 },
            percentile: Col { score: 57044.397, rank: 11, change: 3 },
            nlcs: Col { score: 1094.978, rank: 12, change: 4 },
            log_z: Col { score: 2193.083, rank: 12, change: 4 },
            median: Col { score: 4267.273, rank: 8, change: 0 },
            z: Col { score: 747.983, rank: 8, change: 0 },
        },
    },
    FixtureRow {
        no: "0018",
        name: "Universite Paris Cite",
        articles: 778,
        tc: 35222,
        tc_ave: 45.272,
        average: TableRow {
            rank0: 355,
            rank0_appendix: 355,
            mean: Col { score: 1.901, rank: 355, change: 0 },
            percentile: Col { score: 67.984, rank: 287, change: -68 },
            nlcs: Col { score: 1.304, rank: 305, change: -50 },
            log_z: Col { score: 2.611, rank: 305, change: -50 },
            median: Col { score: 4.116, rank: 355, change: 0 },
            z: Col { score: 0.721, rank: 355, change: 0 },
        },
        sum: TableRow {
            rank0: 19,
            rank0_appendix: 19,
            mean: Col { score: 1478.739, rank: 19, change: 0 },
            percentile: Col { score: 52891.481, rank: 14, change: -5 },
            nlcs: Col { score: 1014.211, rank: 14, change: -5 },
            log_z: Col { score: 2031.319, rank: 14, change: -5 },
            median: Col { score: 3202.0, rank: 19, change: 0 },
            z: Col { score: 561.259, rank: 19, change: 0 },
        },
    },
    FixtureRow {
        no: "0019",
        name: "University of Maryland College Park",
        articles: 750,
        tc: 36078,
        tc_ave: 48.104,
        average: TableRow {
            rank0: 304,
            rank0_appendix: 304,
            mean: Col { score: 2.02, rank: 304, change: 0 },
            percentile: Col { score: 67.803, rank: 294, change: -10 },
            nlcs: Col { score: 1.304, rank: 302, change: -2 },
            log_z: Col { score: 2.612, rank: 302, change: -2 },
            median: Col { score: 4.373, rank: 304, change: 0 },
            z: Col { score: 0.767, rank: 304, change: 0 },
        },
        sum: TableRow {
            rank0: 15,
            rank0_appendix: 15,
            mean: Col { score: 1514.677, rank: 15, change: 0 },
            percentile: Col { score: 50852.295, rank: 16, change: 1 },
            nlcs: Col { score: 978.096, rank: 16, change: 1 },
            log_z: Col { score: 1958.986, rank: 16, change: 1 },
            median: Col { score: 3279.818, rank: 15, change: 0 },
            z: Col { score: 574.899, rank: 15, change: 0 },
        },
    },
    FixtureRow {
        no: "0020",
        name: "Huazhong University of Science & Technology",
        articles: 748,
        tc: 14774,
        tc_ave: 19.751,
        average: TableRow {
            rank0: 776,
            rank0_appendix: 776,
            mean: Col { score: 0.829, rank: 776, change: 0 },
            percentile: Col { score: 50.363, rank: 781, change: 5 },
            nlcs: Col { score: 0.98, rank: 793, change: 17 },
            log_z: Col { score: 1.962, rank: 793, change: 17 },
            median: Col { score: 1.796, rank: 776, change: 0 },
            z: Col { score: 0.315, rank: 776, change: 0 },
        },
        sum: TableRow {
            rank0: 150,
            rank0_appendix: 150,
            mean: Col { score: 620.263, rank: 150, change: 0 },
            percentile: Col { score: 37671.774, rank: 35, change: -115 },
            nlcs: Col { score: 732.791, rank: 35, change: -115 },
            log_z: Col { score: 1467.675, rank: 35, change: -115 },
            median: Col { score: 1343.091, rank: 150, change: 0 },
            z: Col { score: 235.422, rank: 150, change: 0 },
        },
    },
];
