// Generated by tools/ips_moments.py; do not edit by hand.
// 50000 replications per cell, seed 20240611.

pub(crate) const IPS_T_GRID: [usize; 14] = [6, 7, 8, 9, 10, 15, 20, 25, 30, 40, 50, 60, 70, 100];
pub(crate) const IPS_MAX_LAG: usize = 12;

/// `(mean, variance)` of the ADF t-ratio, indexed `[t_index][lag]`.
pub(crate) const IPS_CONSTANT: [[Option<(f64, f64)>; 13]; 14] = [
    // T = 6
    [Some((-1.5592, 2.6326)), None, None, None, None, None, None, None, None, None, None, None, None],
    // T = 7
    [Some((-1.5164, 1.7522)), None, None, None, None, None, None, None, None, None, None, None, None],
    // T = 8
    [Some((-1.5188, 1.4081)), Some((-1.5617, 3.3194)), None, None, None, None, None, None, None, None, None, None, None],
    // T = 9
    [Some((-1.5193, 1.2769)), Some((-1.5191, 1.9852)), None, None, None, None, None, None, None, None, None, None, None],
    // T = 10
    [Some((-1.5174, 1.1372)), Some((-1.4909, 1.5586)), Some((-1.3218, 3.0830)), None, None, None, None, None, None, None, None, None, None],
    // T = 15
    [Some((-1.5166, 0.9400)), Some((-1.4978, 1.0630)), Some((-1.3621, 1.2251)), Some((-1.3249, 1.5201)), Some((-1.1728, 2.1258)), None, None, None, None, None, None, None, None],
    // T = 20
    [Some((-1.5101, 0.8644)), Some((-1.5051, 0.9357)), Some((-1.4026, 1.0194)), Some((-1.3773, 1.1509)), Some((-1.2575, 1.2989)), Some((-1.2203, 1.5104)), Some((-1.1066, 1.8473)), Some((-1.1102, 3.1644)), None, None, None, None, None],
    // T = 25
    [Some((-1.5232, 0.8197)), Some((-1.5143, 0.8685)), Some((-1.4348, 0.9363)), Some((-1.4174, 1.0049)), Some((-1.3243, 1.0921)), Some((-1.2969, 1.2184)), Some((-1.1967, 1.3252)), Some((-1.1624, 1.4739)), Some((-1.0719, 1.7274)), Some((-1.0551, 2.3594)), None, None, None],
    // T = 30
    [Some((-1.5289, 0.8089)), Some((-1.5152, 0.8427)), Some((-1.4451, 0.8960)), Some((-1.4411, 0.9445)), Some((-1.3628, 0.9986)), Some((-1.3525, 1.0743)), Some((-1.2736, 1.1348)), Some((-1.2363, 1.2374)), Some((-1.1551, 1.3479)), Some((-1.1311, 1.4797)), Some((-1.0438, 1.6637)), Some((-1.0042, 2.0083)), Some((-0.9628, 3.3961))],
    // T = 40
    [Some((-1.5334, 0.7718)), Some((-1.5211, 0.8007)), Some((-1.4747, 0.8249)), Some((-1.4625, 0.8770)), Some((-1.4109, 0.9113)), Some((-1.4048, 0.9491)), Some((-1.3402, 1.0124)), Some((-1.3267, 1.0387)), Some((-1.2690, 1.0895)), Some((-1.2480, 1.1582)), Some((-1.1868, 1.2271)), Some((-1.1556, 1.3002)), Some((-1.1003, 1.3691))],
    // T = 50
    [Some((-1.5274, 0.7600)), Some((-1.5253, 0.7876)), Some((-1.4908, 0.8213)), Some((-1.4864, 0.8286)), Some((-1.4438, 0.8678)), Some((-1.4352, 0.8995)), Some((-1.3853, 0.9289)), Some((-1.3840, 0.9570)), Some((-1.3396, 0.9867)), Some((-1.3244, 1.0331)), Some((-1.2685, 1.0807)), Some((-1.2515, 1.1151)), Some((-1.2077, 1.1648))],
    // T = 60
    [Some((-1.5321, 0.7466)), Some((-1.5325, 0.7600)), Some((-1.4871, 0.7858)), Some((-1.4887, 0.7977)), Some((-1.4544, 0.8262)), Some((-1.4518, 0.8568)), Some((-1.4169, 0.8923)), Some((-1.4123, 0.9160)), Some((-1.3800, 0.9271)), Some((-1.3716, 0.9574)), Some((-1.3388, 0.9931)), Some((-1.3083, 1.0252)), Some((-1.2741, 1.0522))],
    // T = 70
    [Some((-1.5247, 0.7456)), Some((-1.5309, 0.7595)), Some((-1.5000, 0.7759)), Some((-1.4996, 0.8041)), Some((-1.4627, 0.8200)), Some((-1.4686, 0.8242)), Some((-1.4302, 0.8508)), Some((-1.4236, 0.8804)), Some((-1.4003, 0.9016)), Some((-1.3921, 0.9089)), Some((-1.3570, 0.9359)), Some((-1.3520, 0.9779)), Some((-1.3201, 0.9965))],
    // T = 100
    [Some((-1.5304, 0.7406)), Some((-1.5324, 0.7390)), Some((-1.5083, 0.7370)), Some((-1.5065, 0.7651)), Some((-1.4963, 0.7784)), Some((-1.4898, 0.7902)), Some((-1.4616, 0.7914)), Some((-1.4601, 0.8089)), Some((-1.4464, 0.8263)), Some((-1.4445, 0.8455)), Some((-1.4200, 0.8515)), Some((-1.4161, 0.8603)), Some((-1.3881, 0.8946))],
];

/// `(mean, variance)` of the ADF t-ratio, indexed `[t_index][lag]`.
pub(crate) const IPS_TREND: [[Option<(f64, f64)>; 13]; 14] = [
    // T = 6
    [None, None, None, None, None, None, None, None, None, None, None, None, None],
    // T = 7
    [Some((-2.2247, 3.0692)), None, None, None, None, None, None, None, None, None, None, None, None],
    // T = 8
    [Some((-2.1883, 1.8640)), None, None, None, None, None, None, None, None, None, None, None, None],
    // T = 9
    [Some((-2.1750, 1.4570)), Some((-2.2917, 4.2295)), None, None, None, None, None, None, None, None, None, None, None],
    // T = 10
    [Some((-2.1687, 1.2416)), Some((-2.2038, 2.3865)), None, None, None, None, None, None, None, None, None, None, None],
    // T = 15
    [Some((-2.1714, 0.8935)), Some((-2.1628, 1.0852)), Some((-1.9514, 1.2743)), Some((-1.9309, 1.9345)), Some((-1.7462, 3.4895)), None, None, None, None, None, None, None, None],
    // T = 20
    [Some((-2.1668, 0.7766)), Some((-2.1605, 0.8894)), Some((-2.0163, 0.9504)), Some((-1.9983, 1.1779)), Some((-1.8283, 1.3463)), Some((-1.7804, 1.7924)), Some((-1.6236, 2.4438)), None, None, None, None, None, None],
    // T = 25
    [Some((-2.1777, 0.7263)), Some((-2.1687, 0.7987)), Some((-2.0633, 0.8400)), Some((-2.0405, 0.9480)), Some((-1.9148, 1.0513)), Some((-1.8715, 1.2268)), Some((-1.7347, 1.3749)), Some((-1.6944, 1.6901)), Some((-1.5535, 2.0500)), Some((-1.5985, 4.0662)), None, None, None],
    // T = 30
    [Some((-2.1664, 0.7027)), Some((-2.1774, 0.7471)), Some((-2.0808, 0.7695)), Some((-2.0792, 0.8588)), Some((-1.9713, 0.9227)), Some((-1.9459, 1.0326)), Some((-1.8409, 1.1126)), Some((-1.8077, 1.2760)), Some((-1.6768, 1.4031)), Some((-1.6330, 1.6169)), Some((-1.5188, 1.8951)), Some((-1.4939, 2.7811)), None],
    // T = 40
    [Some((-2.1706, 0.6559)), Some((-2.1763, 0.6803)), Some((-2.1193, 0.7103)), Some((-2.1033, 0.7472)), Some((-2.0355, 0.7872)), Some((-2.0208, 0.8477)), Some((-1.9439, 0.9020)), Some((-1.9236, 0.9769)), Some((-1.8461, 1.0342)), Some((-1.8104, 1.1375)), Some((-1.7246, 1.2138)), Some((-1.6954, 1.3282)), Some((-1.5944, 1.4385))],
    // T = 50
    [Some((-2.1819, 0.6269)), Some((-2.1752, 0.6589)), Some((-2.1279, 0.6701)), Some((-2.1218, 0.7045)), Some((-2.0716, 0.7314)), Some((-2.0654, 0.7540)), Some((-2.0097, 0.7904)), Some((-1.9957, 0.8397)), Some((-1.9424, 0.8718)), Some((-1.9110, 0.9579)), Some((-1.8502, 0.9877)), Some((-1.8189, 1.0813)), Some((-1.7631, 1.1353))],
    // T = 60
    [Some((-2.1794, 0.6255)), Some((-2.1821, 0.6358)), Some((-2.1453, 0.6550)), Some((-2.1372, 0.6750)), Some((-2.0986, 0.6943)), Some((-2.0909, 0.7115)), Some((-2.0414, 0.7409)), Some((-2.0331, 0.7843)), Some((-1.9891, 0.8031)), Some((-1.9715, 0.8550)), Some((-1.9290, 0.8866)), Some((-1.9038, 0.9293)), Some((-1.8503, 0.9746))],
    // T = 70
    [Some((-2.1724, 0.6139)), Some((-2.1800, 0.6333)), Some((-2.1377, 0.6379)), Some((-2.1378, 0.6512)), Some((-2.1058, 0.6743)), Some((-2.1004, 0.6908)), Some((-2.0671, 0.7039)), Some((-2.0632, 0.7422)), Some((-2.0233, 0.7588)), Some((-2.0188, 0.7811)), Some((-1.9705, 0.8132)), Some((-1.9629, 0.8463)), Some((-1.9150, 0.8769))],
    // T = 100
    [Some((-2.1770, 0.5986)), Some((-2.1769, 0.6066)), Some((-2.1550, 0.6137)), Some((-2.1590, 0.6348)), Some((-2.1399, 0.6239)), Some((-2.1367, 0.6500)), Some((-2.1085, 0.6597)), Some((-2.1042, 0.6610)), Some((-2.0811, 0.6831)), Some((-2.0788, 0.7027)), Some((-2.0496, 0.7138)), Some((-2.0407, 0.7313)), Some((-2.0171, 0.7460))],
];

