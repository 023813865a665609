// Frozen reference values. Produced by the standalone oracle
// gen_golden.py in this directory (hand-rolled adaptive Simpson at
// tol 1e-13 plus direct closed-form evaluation); regenerate with
//     python3 gen_golden.py
// Do not edit by hand.
#![allow(dead_code)]

pub const NEG_C_N1: f64 = 0.9189385332046727;
pub const WEIGHT_N2_ORIGIN: f64 = 0.15915494309189535;
pub const WEIGHT_N1_AT_1: f64 = 0.24197072451914337;
pub const SIGMA0_THETA_AT_0: f64 = 0.881373587019543;
pub const SIGMA0_H_AT_1_N1: f64 = -1.6487212707001282;
pub const SIGMA0_GRADF_N_AT_1: f64 = 1.6487212707001282;
pub const TRANSLATION_SLOPE_V02_AT_1: f64 = 0.956961959327069;
pub const RADIAL_SLOPE_C1_N2_AT_1: f64 = 0.8550196364002437;
pub const TILTED_HF_N1_AT_1: f64 = 0.5773502691896258;
pub const FLUX_BOUND_N2_R3: f64 = 0.21077838947862904;
pub const FLUX_BOUND_N2_R8: f64 = 1.633628269182721e-12;
pub const EXAMPLE_U_AT_0_5: f64 = 0.360771157397486;
pub const EXAMPLE_U_AT_1: f64 = 0.7605622186739041;
pub const EXAMPLE_U_AT_2: f64 = 1.701771480964166;
pub const EXAMPLE_U_AT_3: f64 = 2.6997232348154476;
pub const EXAMPLE_U_AT_4: f64 = 3.6997134535140805;
pub const EXAMPLE_U_AT_6: f64 = 5.699713446682485;
pub const VOLF_SIGMA0_N1: f64 = 0.5475424510469159;
pub const VOLF_HYP_R1_N1: f64 = 0.7896399592356584;
pub const VOLF_HYP_R2_N1: f64 = 0.9131494217868218;
pub const VOLF_HYP_R025_N1: f64 = 0.43309773951047137;
pub const VOLF_HYP_R16_N1: f64 = 0.9980637682221641;
pub const VOLF_HYP_R1_N2: f64 = 0.6556795424187988;
pub const VOLF_HYP_R4_N2: f64 = 0.9466095316542433;
pub const VOLF_HYP_R1_N3: f64 = 0.5648908472456591;
pub const VOLF_HYP_R4_N3: f64 = 0.9227155271228676;
pub const STOKES_FLUX_SIGMA_V01_N1_R4: f64 = 0.547542440145266;
pub const STOKES_FLUX_HYP_V01_N1_r1_R4: f64 = 3.499486684098801;
pub const STOKES_FLUX_WALL_V01_N1_r1_R4: f64 = 2.9519442439535344;
pub const VOLF_SLICE_TRUNC_R4_N1: f64 = 0.9999366575163339;
