use super::QuadValue;

/// Kronrod abscissae on [0, 1]; odd indices are the embedded Gauss nodes.
pub const GK15_NODES: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

pub(crate) const GK15_WK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for GK15_NODES[1], [3], [5], [7].
pub(crate) const G7_W: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Result of one Kronrod panel.
#[derive(Debug, Clone, Copy)]
pub struct PanelEstimate<V> {
    pub kronrod: V,
    pub gauss: V,
    /// ∫|f| by the Kronrod rule, used as rounding floor.
    pub abs: f64,
}

impl<V: QuadValue> PanelEstimate<V> {
    /// |K − G| plus a rounding floor; a deliberately conservative bound.
    pub fn error(&self) -> f64 {
        (self.kronrod - self.gauss).magnitude() + 50.0 * f64::EPSILON * self.abs
    }
}

/// 15-point Kronrod rule with embedded 7-point Gauss rule on [a, b].
pub fn gauss_kronrod_15<V: QuadValue, F: Fn(f64) -> V + ?Sized>(f: &F, a: f64, b: f64) -> PanelEstimate<V> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * GK15_WK[7];
    let mut g = fc * G7_W[3];
    let mut abs = fc.magnitude() * GK15_WK[7];
    for i in 0..7 {
        let dx = h * GK15_NODES[i];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        let s = f1 + f2;
        k = k + s * GK15_WK[i];
        abs += (f1.magnitude() + f2.magnitude()) * GK15_WK[i];
        if i % 2 == 1 {
            g = g + s * G7_W[i / 2];
        }
    }
    let ah = h.abs();
    PanelEstimate { kronrod: k * h, gauss: g * h, abs: abs * ah }
}
