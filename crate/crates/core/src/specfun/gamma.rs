//! Reciprocal gamma near the origin, as needed by Temme's series.

/// Taylor coefficients of 1/Γ(1+z) about z = 0.
const RGAMMA1P: [f64; 31] = [
    1.00000000000000000e+00,
    5.77215664901532866e-01,
    -6.55878071520253902e-01,
    -4.20026350340952370e-02,
    1.66538611382291479e-01,
    -4.21977345555443334e-02,
    -9.62197152787697303e-03,
    7.21894324666309990e-03,
    -1.16516759185906517e-03,
    -2.15241674114950975e-04,
    1.28050282388116196e-04,
    -2.01348547807882387e-05,
    -1.25049348214267063e-06,
    1.13302723198169593e-06,
    -2.05633841697760707e-07,
    6.11609510448141609e-09,
    5.00200764446922295e-09,
    -1.18127457048702004e-09,
    1.04342671169110054e-10,
    7.78226343990507081e-12,
    -3.69680561864220598e-12,
    5.10037028745447575e-13,
    -2.05832605356650664e-14,
    -5.34812253942301782e-15,
    1.22677862823826084e-15,
    -1.18125930169745883e-16,
    1.18669225475160037e-18,
    1.41238065531803186e-18,
    -2.29874568443537022e-19,
    1.71440632192733743e-20,
    1.33735173049369309e-22,
];

/// 1/Γ(1+z), accurate to a few ulps for |z| ≤ 1.
pub(crate) fn rgamma1p(z: f64) -> f64 {
    RGAMMA1P.iter().rev().fold(0.0, |acc, &c| acc * z + c)
}

/// Temme's auxiliary quantities for |mu| ≤ 1/2:
/// `(gam1, gam2, 1/Γ(1+μ), 1/Γ(1−μ))` with
/// gam1 = (1/Γ(1−μ) − 1/Γ(1+μ))/(2μ) and gam2 = (1/Γ(1−μ) + 1/Γ(1+μ))/2.
///
/// Both are formed from the even and odd parts of the Taylor series, so
/// there is no cancellation as μ → 0.
pub(crate) fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    let mu2 = mu * mu;
    let mut even = 0.0;
    let mut odd = 0.0;
    for i in (0..RGAMMA1P.len()).rev() {
        if i % 2 == 0 {
            even = even * mu2 + RGAMMA1P[i];
        } else {
            odd = odd * mu2 + RGAMMA1P[i];
        }
    }
    // g(μ) = even(μ²) + μ·odd(μ²)
    let gampl = even + mu * odd;
    let gammi = even - mu * odd;
    (-odd, even, gampl, gammi)
}
