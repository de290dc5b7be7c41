"""Unit-root critical values generated by ``infoveil.econometrics.cvgen``.

Monte Carlo: 30000 Gaussian random walks per sample size, Philox seed 20200212.
TABLE[variant][i][j] holds the (1%, 5%, 10%) quantiles for GRID_T[i] and
GRID_LAGS[j]; None marks lag orders too long for the sample size.
"""

GRID_T = (30, 50, 75, 100, 125, 150, 200, 300, 500, 1000)
GRID_LAGS = (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30)
LEVELS = (0.01, 0.05, 0.1)

# T -> infinity: MacKinnon (2010) asymptotic values (constant / no constant)
ASYMPTOTIC = {
    "adf_no_trend": (-3.43035, -2.86154, -2.56677),
    "dfgls_demeaned": (-2.56574, -1.94100, -1.61682),
}

TABLE = {
    'adf_no_trend': [
        [
            (-3.6784, -2.9903, -2.6348),
            (-3.7103, -2.9918, -2.6401),
            (-3.6618, -2.9353, -2.5728),
            (-3.6732, -2.9569, -2.5927),
            (-3.6468, -2.8788, -2.54),
            (-3.7194, -2.9221, -2.5424),
            (-3.6859, -2.9077, -2.5065),
            (-3.8187, -2.9396, -2.5447),
            (-3.7905, -2.9108, -2.5183),
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
        ],
        [
            (-3.5564, -2.9244, -2.5984),
            (-3.5663, -2.9237, -2.5957),
            (-3.5476, -2.8921, -2.5706),
            (-3.5198, -2.8881, -2.5775),
            (-3.5255, -2.8621, -2.5395),
            (-3.5205, -2.8776, -2.5575),
            (-3.4861, -2.8334, -2.5099),
            (-3.5171, -2.8453, -2.5175),
            (-3.4686, -2.81, -2.493),
            (-3.4767, -2.8132, -2.4969),
            (-3.4889, -2.7986, -2.4694),
            (-3.5123, -2.8126, -2.4749),
            (-3.5381, -2.8149, -2.4634),
            (-3.534, -2.843, -2.4821),
            (-3.5413, -2.817, -2.4584),
            (-3.6194, -2.8289, -2.4688),
            (-3.5852, -2.8176, -2.4405),
            (-3.6498, -2.8276, -2.4358),
            (-3.7028, -2.8301, -2.4347),
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
        ],
        [
            (-3.5485, -2.898, -2.5935),
            (-3.5433, -2.9065, -2.5974),
            (-3.5268, -2.8809, -2.5634),
            (-3.5037, -2.8909, -2.571),
            (-3.4715, -2.8687, -2.562),
            (-3.4897, -2.855, -2.5579),
            (-3.4745, -2.839, -2.5293),
            (-3.486, -2.8523, -2.5368),
            (-3.4643, -2.8242, -2.5141),
            (-3.4423, -2.8189, -2.5167),
            (-3.4107, -2.8049, -2.4938),
            (-3.4391, -2.8032, -2.5039),
            (-3.4189, -2.7969, -2.4861),
            (-3.4431, -2.7933, -2.4735),
            (-3.3974, -2.7716, -2.4587),
            (-3.3987, -2.7675, -2.4632),
            (-3.3556, -2.7645, -2.4501),
            (-3.4243, -2.7802, -2.459),
            (-3.4464, -2.7872, -2.4448),
            (-3.428, -2.7829, -2.4512),
            (-3.4455, -2.7622, -2.4319),
            (-3.4337, -2.7578, -2.4354),
            (-3.384, -2.7457, -2.4195),
            (-3.452, -2.744, -2.4149),
            (-3.4033, -2.7178, -2.3874),
            (-3.5164, -2.767, -2.4035),
            (-3.4798, -2.7394, -2.3822),
            (-3.4428, -2.7199, -2.3813),
            (-3.4828, -2.7271, -2.3666),
            (-3.5244, -2.7482, -2.3619),
            (-3.5868, -2.7669, -2.3773),
        ],
        [
            (-3.4659, -2.9029, -2.5793),
            (-3.4909, -2.9054, -2.5888),
            (-3.4799, -2.8755, -2.5631),
            (-3.4735, -2.8824, -2.5625),
            (-3.4613, -2.8664, -2.5461),
            (-3.4373, -2.8515, -2.5509),
            (-3.4459, -2.843, -2.5343),
            (-3.4491, -2.8451, -2.5377),
            (-3.4345, -2.8279, -2.5275),
            (-3.43, -2.8319, -2.5322),
            (-3.4373, -2.8285, -2.5154),
            (-3.4061, -2.8126, -2.5127),
            (-3.4124, -2.7915, -2.4966),
            (-3.4157, -2.7984, -2.4948),
            (-3.3682, -2.7887, -2.4884),
            (-3.4127, -2.7803, -2.4866),
            (-3.3805, -2.768, -2.473),
            (-3.3993, -2.7604, -2.4599),
            (-3.3733, -2.7476, -2.4497),
            (-3.3986, -2.7563, -2.451),
            (-3.367, -2.757, -2.4492),
            (-3.3828, -2.7705, -2.4484),
            (-3.3289, -2.7392, -2.4344),
            (-3.3503, -2.7624, -2.4463),
            (-3.331, -2.7491, -2.4396),
            (-3.3926, -2.7533, -2.4461),
            (-3.3797, -2.731, -2.4258),
            (-3.3444, -2.7482, -2.4239),
            (-3.3601, -2.7206, -2.4071),
            (-3.3895, -2.7294, -2.408),
            (-3.3809, -2.7169, -2.3855),
        ],
        [
            (-3.4837, -2.884, -2.5737),
            (-3.5104, -2.8869, -2.5796),
            (-3.4735, -2.8754, -2.5711),
            (-3.4564, -2.8743, -2.5776),
            (-3.4344, -2.8653, -2.5607),
            (-3.4329, -2.852, -2.5641),
            (-3.4413, -2.8528, -2.5501),
            (-3.442, -2.844, -2.547),
            (-3.4193, -2.8407, -2.5328),
            (-3.4144, -2.8394, -2.5365),
            (-3.3994, -2.8298, -2.5211),
            (-3.3972, -2.8264, -2.5278),
            (-3.3807, -2.8062, -2.5142),
            (-3.3778, -2.8111, -2.5085),
            (-3.3775, -2.7913, -2.4997),
            (-3.3815, -2.7946, -2.4952),
            (-3.3659, -2.7802, -2.4791),
            (-3.3843, -2.7752, -2.481),
            (-3.3873, -2.7698, -2.464),
            (-3.3669, -2.7722, -2.469),
            (-3.353, -2.7605, -2.4603),
            (-3.3627, -2.7676, -2.4675),
            (-3.3484, -2.7659, -2.466),
            (-3.364, -2.7677, -2.4597),
            (-3.3715, -2.7613, -2.4458),
            (-3.3508, -2.7553, -2.4502),
            (-3.3622, -2.7434, -2.4293),
            (-3.3767, -2.7473, -2.4326),
            (-3.3572, -2.7497, -2.4248),
            (-3.3624, -2.7547, -2.4376),
            (-3.3587, -2.7348, -2.4161),
        ],
        [
            (-3.4816, -2.8847, -2.5793),
            (-3.4787, -2.8817, -2.5772),
            (-3.4684, -2.8698, -2.5644),
            (-3.4655, -2.875, -2.5633),
            (-3.4653, -2.8596, -2.5639),
            (-3.4601, -2.8611, -2.5653),
            (-3.4472, -2.8545, -2.5513),
            (-3.4559, -2.8554, -2.5531),
            (-3.4403, -2.8482, -2.5348),
            (-3.4201, -2.8441, -2.5394),
            (-3.4135, -2.8388, -2.5264),
            (-3.4283, -2.8406, -2.5266),
            (-3.3974, -2.8231, -2.5184),
            (-3.4066, -2.8149, -2.5182),
            (-3.3747, -2.8018, -2.5126),
            (-3.3876, -2.7991, -2.5096),
            (-3.362, -2.7927, -2.5002),
            (-3.3925, -2.7872, -2.4921),
            (-3.3628, -2.7835, -2.4807),
            (-3.3747, -2.77, -2.4823),
            (-3.3359, -2.7816, -2.4663),
            (-3.3311, -2.7831, -2.4762),
            (-3.354, -2.7746, -2.4693),
            (-3.346, -2.7583, -2.4683),
            (-3.3344, -2.7559, -2.4557),
            (-3.3305, -2.7561, -2.4603),
            (-3.3519, -2.7492, -2.4416),
            (-3.3419, -2.7518, -2.4434),
            (-3.3541, -2.7508, -2.4465),
            (-3.3644, -2.7603, -2.4507),
            (-3.348, -2.751, -2.4475),
        ],
        [
            (-3.4598, -2.8716, -2.5687),
            (-3.4283, -2.867, -2.5637),
            (-3.446, -2.8559, -2.5542),
            (-3.4266, -2.863, -2.5576),
            (-3.4375, -2.8468, -2.5515),
            (-3.4397, -2.8471, -2.5544),
            (-3.4188, -2.8384, -2.538),
            (-3.441, -2.8459, -2.544),
            (-3.4265, -2.8295, -2.5359),
            (-3.423, -2.8341, -2.534),
            (-3.3951, -2.8364, -2.5331),
            (-3.4095, -2.8374, -2.5351),
            (-3.4045, -2.8238, -2.5214),
            (-3.4024, -2.8246, -2.5253),
            (-3.3838, -2.8245, -2.5119),
            (-3.3978, -2.8182, -2.5166),
            (-3.3934, -2.8023, -2.5079),
            (-3.3827, -2.7924, -2.5071),
            (-3.3611, -2.804, -2.5007),
            (-3.3609, -2.7949, -2.5133),
            (-3.3262, -2.7784, -2.502),
            (-3.322, -2.779, -2.4901),
            (-3.296, -2.7708, -2.4879),
            (-3.3388, -2.7767, -2.4842),
            (-3.3559, -2.7702, -2.4797),
            (-3.3585, -2.7727, -2.4785),
            (-3.3617, -2.7653, -2.4746),
            (-3.3404, -2.7643, -2.467),
            (-3.3589, -2.7656, -2.4621),
            (-3.3594, -2.7524, -2.4538),
            (-3.3655, -2.7395, -2.4496),
        ],
        [
            (-3.4701, -2.8928, -2.5786),
            (-3.493, -2.8904, -2.5765),
            (-3.4986, -2.8825, -2.5801),
            (-3.4834, -2.8846, -2.5782),
            (-3.4728, -2.8709, -2.5698),
            (-3.4676, -2.8714, -2.5684),
            (-3.4553, -2.8588, -2.5595),
            (-3.4435, -2.8632, -2.5611),
            (-3.4233, -2.8643, -2.5592),
            (-3.4296, -2.8627, -2.5544),
            (-3.4398, -2.8621, -2.5575),
            (-3.424, -2.8555, -2.5521),
            (-3.4405, -2.8496, -2.5471),
            (-3.4123, -2.8453, -2.5502),
            (-3.4034, -2.8437, -2.5405),
            (-3.4063, -2.8434, -2.5436),
            (-3.4168, -2.8404, -2.5355),
            (-3.4285, -2.8405, -2.5286),
            (-3.3923, -2.8276, -2.5353),
            (-3.392, -2.8351, -2.5286),
            (-3.3951, -2.8274, -2.5221),
            (-3.3949, -2.8256, -2.5268),
            (-3.4078, -2.819, -2.5266),
            (-3.3766, -2.8219, -2.527),
            (-3.3912, -2.8094, -2.5082),
            (-3.3688, -2.8097, -2.5027),
            (-3.3715, -2.8005, -2.4993),
            (-3.3775, -2.8029, -2.4971),
            (-3.3555, -2.7994, -2.5021),
            (-3.3698, -2.7897, -2.4994),
            (-3.3776, -2.7883, -2.498),
        ],
        [
            (-3.4541, -2.8726, -2.5792),
            (-3.4462, -2.876, -2.5818),
            (-3.4476, -2.8724, -2.5807),
            (-3.4474, -2.8773, -2.5758),
            (-3.4658, -2.8788, -2.5727),
            (-3.4607, -2.8761, -2.572),
            (-3.4721, -2.8741, -2.5747),
            (-3.455, -2.8691, -2.574),
            (-3.4417, -2.8723, -2.5669),
            (-3.4318, -2.8718, -2.5654),
            (-3.435, -2.8666, -2.5602),
            (-3.4435, -2.8712, -2.5663),
            (-3.4395, -2.8687, -2.5577),
            (-3.4414, -2.8643, -2.5651),
            (-3.4221, -2.8606, -2.5579),
            (-3.4384, -2.8642, -2.5603),
            (-3.4356, -2.857, -2.5549),
            (-3.4465, -2.8605, -2.5555),
            (-3.426, -2.8603, -2.5539),
            (-3.423, -2.8598, -2.553),
            (-3.4159, -2.8485, -2.5502),
            (-3.4191, -2.8498, -2.5575),
            (-3.4176, -2.8422, -2.5508),
            (-3.4074, -2.83, -2.5485),
            (-3.4086, -2.8301, -2.5445),
            (-3.3966, -2.8369, -2.5387),
            (-3.3844, -2.8386, -2.5404),
            (-3.3806, -2.8293, -2.5447),
            (-3.3784, -2.8397, -2.5419),
            (-3.3784, -2.8287, -2.5386),
            (-3.3815, -2.8246, -2.5389),
        ],
        [
            (-3.4554, -2.8817, -2.5802),
            (-3.4481, -2.878, -2.5792),
            (-3.4389, -2.8784, -2.5784),
            (-3.4334, -2.8722, -2.5757),
            (-3.459, -2.8751, -2.5757),
            (-3.4526, -2.8758, -2.5777),
            (-3.4425, -2.8697, -2.5753),
            (-3.4284, -2.8709, -2.5739),
            (-3.4487, -2.8711, -2.5712),
            (-3.4442, -2.8705, -2.5742),
            (-3.4428, -2.8768, -2.5811),
            (-3.4435, -2.878, -2.5807),
            (-3.4429, -2.8693, -2.5778),
            (-3.4364, -2.873, -2.5754),
            (-3.4299, -2.8675, -2.5786),
            (-3.4361, -2.8734, -2.5782),
            (-3.4403, -2.8696, -2.5743),
            (-3.4457, -2.8728, -2.5739),
            (-3.4346, -2.87, -2.5791),
            (-3.4457, -2.8727, -2.5788),
            (-3.4453, -2.8636, -2.5808),
            (-3.4404, -2.8627, -2.5775),
            (-3.4307, -2.8635, -2.5735),
            (-3.4132, -2.8649, -2.5786),
            (-3.4254, -2.8645, -2.5764),
            (-3.423, -2.8691, -2.5774),
            (-3.426, -2.8645, -2.5708),
            (-3.4285, -2.8676, -2.5704),
            (-3.4335, -2.8617, -2.5729),
            (-3.4314, -2.8622, -2.5729),
            (-3.4239, -2.8627, -2.5672),
        ],
    ],
    'dfgls_demeaned': [
        [
            (-3.0933, -2.4496, -2.126),
            (-3.0857, -2.4248, -2.1133),
            (-2.9748, -2.3271, -2.0269),
            (-2.9883, -2.316, -2.0162),
            (-2.8654, -2.2391, -1.9383),
            (-2.9059, -2.2536, -1.9419),
            (-2.83, -2.1578, -1.8529),
            (-2.911, -2.2009, -1.8861),
            (-2.8952, -2.1691, -1.8426),
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
        ],
        [
            (-2.86, -2.2642, -1.9671),
            (-2.8788, -2.261, -1.9489),
            (-2.8246, -2.2156, -1.8977),
            (-2.8162, -2.2059, -1.9105),
            (-2.7346, -2.1531, -1.8571),
            (-2.767, -2.1699, -1.8669),
            (-2.7052, -2.0923, -1.8145),
            (-2.7216, -2.1099, -1.8168),
            (-2.6729, -2.0693, -1.7795),
            (-2.7153, -2.0904, -1.787),
            (-2.6646, -2.0357, -1.7494),
            (-2.6959, -2.0656, -1.7696),
            (-2.674, -2.0488, -1.7364),
            (-2.7151, -2.0711, -1.748),
            (-2.6999, -2.0414, -1.7249),
            (-2.7367, -2.0708, -1.7505),
            (-2.7503, -2.0565, -1.7303),
            (-2.8269, -2.0916, -1.7451),
            (-2.8643, -2.0834, -1.7402),
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
            None,
        ],
        [
            (-2.7946, -2.173, -1.8688),
            (-2.7848, -2.175, -1.8746),
            (-2.7514, -2.1433, -1.8392),
            (-2.7793, -2.1356, -1.8329),
            (-2.7393, -2.1124, -1.8046),
            (-2.713, -2.1239, -1.8077),
            (-2.6941, -2.0898, -1.7792),
            (-2.7264, -2.0793, -1.7858),
            (-2.6691, -2.0593, -1.7547),
            (-2.6684, -2.0526, -1.7485),
            (-2.6019, -2.0146, -1.7282),
            (-2.6512, -2.0201, -1.7366),
            (-2.5735, -1.9894, -1.7071),
            (-2.6066, -1.9965, -1.7039),
            (-2.5938, -1.9835, -1.6782),
            (-2.6037, -1.98, -1.6883),
            (-2.5929, -1.9599, -1.6675),
            (-2.6373, -1.996, -1.6854),
            (-2.5962, -1.9728, -1.6722),
            (-2.634, -1.9819, -1.6878),
            (-2.6193, -1.982, -1.6617),
            (-2.6682, -1.9918, -1.6773),
            (-2.6554, -1.9792, -1.6635),
            (-2.632, -1.9996, -1.6783),
            (-2.6186, -1.9923, -1.6641),
            (-2.6967, -2.0219, -1.6873),
            (-2.6482, -2.0017, -1.6727),
            (-2.6936, -2.0078, -1.691),
            (-2.6845, -1.9979, -1.6744),
            (-2.7213, -2.029, -1.6858),
            (-2.7632, -2.0248, -1.6817),
        ],
        [
            (-2.7351, -2.1108, -1.8092),
            (-2.7518, -2.1024, -1.8057),
            (-2.6831, -2.094, -1.7963),
            (-2.717, -2.1038, -1.7948),
            (-2.6865, -2.0766, -1.769),
            (-2.6704, -2.071, -1.7788),
            (-2.6498, -2.0491, -1.7595),
            (-2.6527, -2.06, -1.7483),
            (-2.6493, -2.0354, -1.726),
            (-2.6443, -2.0395, -1.7289),
            (-2.6416, -2.0169, -1.7143),
            (-2.6305, -2.0167, -1.7089),
            (-2.5895, -1.9916, -1.6937),
            (-2.6334, -2.0002, -1.6929),
            (-2.5965, -1.9785, -1.678),
            (-2.5824, -1.9854, -1.6773),
            (-2.5745, -1.9598, -1.6574),
            (-2.5727, -1.9635, -1.664),
            (-2.5365, -1.9309, -1.642),
            (-2.5267, -1.9541, -1.6499),
            (-2.5168, -1.945, -1.647),
            (-2.5094, -1.9422, -1.648),
            (-2.5317, -1.9256, -1.639),
            (-2.5423, -1.9209, -1.6393),
            (-2.5305, -1.9222, -1.6225),
            (-2.5409, -1.9314, -1.6335),
            (-2.5278, -1.9187, -1.6296),
            (-2.5241, -1.9371, -1.642),
            (-2.5058, -1.9228, -1.6205),
            (-2.5501, -1.9292, -1.6325),
            (-2.516, -1.9215, -1.6236),
        ],
        [
            (-2.719, -2.0971, -1.7897),
            (-2.7067, -2.1032, -1.7884),
            (-2.6905, -2.0903, -1.773),
            (-2.6925, -2.0839, -1.7659),
            (-2.6697, -2.069, -1.7523),
            (-2.6888, -2.0687, -1.7509),
            (-2.6661, -2.0274, -1.7288),
            (-2.6724, -2.0447, -1.728),
            (-2.635, -2.0276, -1.7164),
            (-2.6101, -2.0221, -1.7141),
            (-2.5928, -2.0028, -1.7039),
            (-2.6026, -2.0126, -1.7093),
            (-2.5692, -1.9988, -1.6934),
            (-2.5759, -1.9906, -1.693),
            (-2.5872, -1.9697, -1.6773),
            (-2.5768, -1.9755, -1.6781),
            (-2.5597, -1.9634, -1.6592),
            (-2.5701, -1.9637, -1.6651),
            (-2.5298, -1.9497, -1.6463),
            (-2.5225, -1.9506, -1.6561),
            (-2.5149, -1.938, -1.6395),
            (-2.5459, -1.9228, -1.6276),
            (-2.5274, -1.9116, -1.6195),
            (-2.508, -1.9158, -1.6209),
            (-2.5078, -1.895, -1.6093),
            (-2.514, -1.9114, -1.6144),
            (-2.5013, -1.8921, -1.6081),
            (-2.4933, -1.9083, -1.625),
            (-2.4998, -1.9097, -1.6098),
            (-2.5117, -1.9089, -1.6148),
            (-2.4884, -1.8925, -1.5998),
        ],
        [
            (-2.6974, -2.0784, -1.7733),
            (-2.679, -2.074, -1.7672),
            (-2.6868, -2.0575, -1.7502),
            (-2.6613, -2.0598, -1.7458),
            (-2.6599, -2.0509, -1.7321),
            (-2.6603, -2.0443, -1.7436),
            (-2.6324, -2.031, -1.7309),
            (-2.6452, -2.0384, -1.7287),
            (-2.628, -2.0177, -1.7121),
            (-2.608, -2.0191, -1.7076),
            (-2.6014, -1.9991, -1.6931),
            (-2.606, -2.0063, -1.6873),
            (-2.5977, -1.9851, -1.6832),
            (-2.5815, -1.9774, -1.6845),
            (-2.5542, -1.9649, -1.676),
            (-2.5538, -1.9768, -1.6672),
            (-2.5276, -1.9572, -1.6563),
            (-2.5191, -1.9601, -1.6576),
            (-2.4961, -1.945, -1.6501),
            (-2.5108, -1.9451, -1.6519),
            (-2.4855, -1.9188, -1.63),
            (-2.5019, -1.9201, -1.6361),
            (-2.5347, -1.9087, -1.6213),
            (-2.5025, -1.9109, -1.6233),
            (-2.5043, -1.8948, -1.6059),
            (-2.516, -1.908, -1.6094),
            (-2.4868, -1.9018, -1.6005),
            (-2.5132, -1.8993, -1.5972),
            (-2.4819, -1.8849, -1.597),
            (-2.4997, -1.8982, -1.6055),
            (-2.4994, -1.8847, -1.5907),
        ],
        [
            (-2.6662, -2.0404, -1.7284),
            (-2.6391, -2.034, -1.7239),
            (-2.6272, -2.0191, -1.7142),
            (-2.6355, -2.0236, -1.7172),
            (-2.6184, -2.0113, -1.7084),
            (-2.6531, -2.0226, -1.7059),
            (-2.6382, -1.9998, -1.6943),
            (-2.6547, -2.0088, -1.6928),
            (-2.6047, -1.9889, -1.6793),
            (-2.6289, -1.99, -1.6772),
            (-2.6225, -1.9864, -1.6729),
            (-2.6036, -1.9841, -1.6829),
            (-2.5829, -1.9754, -1.6758),
            (-2.5782, -1.9837, -1.6708),
            (-2.575, -1.977, -1.6639),
            (-2.5973, -1.977, -1.6664),
            (-2.5815, -1.9652, -1.6614),
            (-2.5762, -1.9755, -1.6675),
            (-2.5659, -1.9551, -1.6591),
            (-2.5753, -1.956, -1.6581),
            (-2.5505, -1.954, -1.6477),
            (-2.5335, -1.9579, -1.6432),
            (-2.5309, -1.9404, -1.6386),
            (-2.5525, -1.9446, -1.6414),
            (-2.5509, -1.9388, -1.6333),
            (-2.5156, -1.9384, -1.6246),
            (-2.5256, -1.9259, -1.6171),
            (-2.523, -1.9211, -1.6195),
            (-2.5275, -1.9092, -1.6105),
            (-2.5161, -1.9089, -1.609),
            (-2.4917, -1.8995, -1.6035),
        ],
        [
            (-2.597, -2.0073, -1.6852),
            (-2.5931, -2.0076, -1.6844),
            (-2.5842, -1.9942, -1.6805),
            (-2.5901, -1.9936, -1.6743),
            (-2.6001, -1.9869, -1.6704),
            (-2.6116, -1.9864, -1.6734),
            (-2.6012, -1.9762, -1.6656),
            (-2.5746, -1.9823, -1.656),
            (-2.5731, -1.9731, -1.6547),
            (-2.567, -1.9708, -1.657),
            (-2.5723, -1.9709, -1.659),
            (-2.5733, -1.9685, -1.6519),
            (-2.5603, -1.9717, -1.6473),
            (-2.5662, -1.9715, -1.6492),
            (-2.56, -1.9638, -1.6451),
            (-2.5476, -1.9626, -1.6381),
            (-2.5529, -1.9505, -1.6324),
            (-2.563, -1.9422, -1.6342),
            (-2.5512, -1.936, -1.6359),
            (-2.572, -1.9378, -1.6365),
            (-2.5456, -1.938, -1.6303),
            (-2.5512, -1.9342, -1.6227),
            (-2.5573, -1.9367, -1.617),
            (-2.5434, -1.934, -1.6167),
            (-2.5453, -1.9148, -1.6168),
            (-2.5347, -1.9234, -1.6197),
            (-2.5275, -1.9145, -1.6148),
            (-2.5112, -1.9142, -1.6113),
            (-2.5103, -1.9136, -1.6035),
            (-2.4991, -1.9152, -1.6063),
            (-2.4992, -1.9131, -1.5972),
        ],
        [
            (-2.5884, -1.9831, -1.6676),
            (-2.5891, -1.976, -1.6701),
            (-2.6143, -1.9808, -1.6629),
            (-2.6109, -1.9843, -1.6632),
            (-2.6069, -1.9788, -1.6642),
            (-2.6053, -1.9772, -1.6672),
            (-2.599, -1.973, -1.6626),
            (-2.5952, -1.9741, -1.6608),
            (-2.5844, -1.9684, -1.6551),
            (-2.5816, -1.9666, -1.6592),
            (-2.5545, -1.9723, -1.6536),
            (-2.5796, -1.9744, -1.656),
            (-2.5871, -1.9635, -1.6511),
            (-2.5737, -1.9682, -1.6511),
            (-2.5803, -1.9588, -1.6481),
            (-2.5706, -1.9606, -1.6495),
            (-2.5549, -1.951, -1.6452),
            (-2.5582, -1.9477, -1.6474),
            (-2.5683, -1.9534, -1.6428),
            (-2.5793, -1.9528, -1.6421),
            (-2.5648, -1.9434, -1.6405),
            (-2.5649, -1.9447, -1.6377),
            (-2.5561, -1.945, -1.6342),
            (-2.5583, -1.9503, -1.6336),
            (-2.5275, -1.9448, -1.6299),
            (-2.5393, -1.9466, -1.6336),
            (-2.5295, -1.9436, -1.6276),
            (-2.5505, -1.9414, -1.6316),
            (-2.5504, -1.9379, -1.6244),
            (-2.5486, -1.9374, -1.6272),
            (-2.5441, -1.9365, -1.6194),
        ],
        [
            (-2.5732, -1.9517, -1.6406),
            (-2.5862, -1.9535, -1.6412),
            (-2.5735, -1.9502, -1.6335),
            (-2.5694, -1.9515, -1.642),
            (-2.5603, -1.9556, -1.6371),
            (-2.5479, -1.958, -1.6393),
            (-2.5571, -1.9579, -1.6366),
            (-2.5482, -1.9562, -1.6359),
            (-2.5546, -1.952, -1.6309),
            (-2.562, -1.9521, -1.6344),
            (-2.5588, -1.9505, -1.6303),
            (-2.5528, -1.944, -1.6365),
            (-2.5465, -1.9487, -1.6342),
            (-2.5701, -1.9478, -1.6327),
            (-2.569, -1.9469, -1.6319),
            (-2.5568, -1.9476, -1.6367),
            (-2.5551, -1.9418, -1.6364),
            (-2.5612, -1.9443, -1.6328),
            (-2.5619, -1.9352, -1.6338),
            (-2.5624, -1.9385, -1.633),
            (-2.5444, -1.9397, -1.633),
            (-2.5495, -1.9409, -1.6356),
            (-2.5571, -1.9368, -1.6283),
            (-2.5446, -1.9397, -1.629),
            (-2.5475, -1.9402, -1.6248),
            (-2.557, -1.94, -1.6297),
            (-2.5584, -1.9371, -1.6239),
            (-2.5663, -1.9377, -1.62),
            (-2.5614, -1.9355, -1.618),
            (-2.5614, -1.9313, -1.6213),
            (-2.5571, -1.9318, -1.6126),
        ],
    ],
}
