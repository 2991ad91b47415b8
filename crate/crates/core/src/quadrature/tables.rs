// Generated from published symmetric rules (Xiao-Gimbutas) and Gauss-Legendre nodes.
// Triangle rows are (xi, eta, weight) on the reference triangle with vertices (0,0), (1,0), (0,1).

pub(super) static TRI_1: [[f64; 3]; 1] = [
    [0.3333333333333333, 0.3333333333333333, 0.5],
];

pub(super) static TRI_2: [[f64; 3]; 3] = [
    [0.16666666666666666, 0.16666666666666666, 0.16666666666666666],
    [0.16666666666666666, 0.6666666666666667, 0.16666666666666666],
    [0.6666666666666667, 0.16666666666666666, 0.16666666666666666],
];

pub(super) static TRI_3: [[f64; 3]; 6] = [
    [0.4459484909159649, 0.4459484909159649, 0.11169079483900574],
    [0.09157621350977085, 0.09157621350977085, 0.05497587182766094],
    [0.4459484909159649, 0.10810301816807022, 0.11169079483900574],
    [0.09157621350977085, 0.8168475729804583, 0.05497587182766094],
    [0.10810301816807022, 0.4459484909159649, 0.11169079483900574],
    [0.8168475729804583, 0.09157621350977085, 0.05497587182766094],
];

pub(super) static TRI_4: [[f64; 3]; 6] = [
    [0.4459484909159649, 0.4459484909159649, 0.11169079483900574],
    [0.09157621350977085, 0.09157621350977085, 0.05497587182766094],
    [0.4459484909159649, 0.10810301816807022, 0.11169079483900574],
    [0.09157621350977085, 0.8168475729804583, 0.05497587182766094],
    [0.10810301816807022, 0.4459484909159649, 0.11169079483900574],
    [0.8168475729804583, 0.09157621350977085, 0.05497587182766094],
];

pub(super) static TRI_5: [[f64; 3]; 7] = [
    [0.3333333333333333, 0.3333333333333333, 0.1125],
    [0.1012865073234564, 0.1012865073234564, 0.06296959027241357],
    [0.47014206410511505, 0.47014206410511505, 0.0661970763942531],
    [0.1012865073234564, 0.7974269853530872, 0.06296959027241357],
    [0.47014206410511505, 0.05971587178976989, 0.0661970763942531],
    [0.7974269853530872, 0.1012865073234564, 0.06296959027241357],
    [0.05971587178976989, 0.47014206410511505, 0.0661970763942531],
];

pub(super) static TRI_6: [[f64; 3]; 12] = [
    [0.21942998254978302, 0.21942998254978302, 0.08566656207649052],
    [0.48013796411221504, 0.48013796411221504, 0.04036554479651549],
    [0.21942998254978302, 0.561140034900434, 0.08566656207649052],
    [0.48013796411221504, 0.039724071775569914, 0.04036554479651549],
    [0.561140034900434, 0.21942998254978302, 0.08566656207649052],
    [0.039724071775569914, 0.48013796411221504, 0.04036554479651549],
    [0.019371724361240805, 0.14161901592396814, 0.02031727989683033],
    [0.8390092597147911, 0.019371724361240805, 0.02031727989683033],
    [0.14161901592396814, 0.8390092597147911, 0.02031727989683033],
    [0.14161901592396814, 0.019371724361240805, 0.02031727989683033],
    [0.8390092597147911, 0.14161901592396814, 0.02031727989683033],
    [0.019371724361240805, 0.8390092597147911, 0.02031727989683033],
];

pub(super) static TRI_7: [[f64; 3]; 15] = [
    [0.47319565368925104, 0.47319565368925104, 0.02659041664838023],
    [0.057797640054506494, 0.057797640054506494, 0.020459085197028434],
    [0.24166360639724743, 0.24166360639724743, 0.06386262428056692],
    [0.47319565368925104, 0.05360869262149792, 0.02659041664838023],
    [0.057797640054506494, 0.884404719890987, 0.020459085197028434],
    [0.24166360639724743, 0.5166727872055051, 0.06386262428056692],
    [0.05360869262149792, 0.47319565368925104, 0.02659041664838023],
    [0.884404719890987, 0.057797640054506494, 0.020459085197028434],
    [0.5166727872055051, 0.24166360639724743, 0.06386262428056692],
    [0.046971206130085534, 0.2593390118657857, 0.027877270270345547],
    [0.6936897820041288, 0.046971206130085534, 0.027877270270345547],
    [0.2593390118657857, 0.6936897820041288, 0.027877270270345547],
    [0.2593390118657857, 0.046971206130085534, 0.027877270270345547],
    [0.6936897820041288, 0.2593390118657857, 0.027877270270345547],
    [0.046971206130085534, 0.6936897820041288, 0.027877270270345547],
];

pub(super) static TRI_8: [[f64; 3]; 16] = [
    [0.3333333333333333, 0.3333333333333333, 0.0721578038388936],
    [0.17056930775176027, 0.17056930775176027, 0.05160868526735912],
    [0.4592925882927231, 0.4592925882927231, 0.04754581713364232],
    [0.05054722831703107, 0.05054722831703107, 0.01622924881159904],
    [0.17056930775176027, 0.6588613844964795, 0.05160868526735912],
    [0.4592925882927231, 0.08141482341455375, 0.04754581713364232],
    [0.05054722831703107, 0.8989055433659379, 0.01622924881159904],
    [0.6588613844964795, 0.17056930775176027, 0.05160868526735912],
    [0.08141482341455375, 0.4592925882927231, 0.04754581713364232],
    [0.8989055433659379, 0.05054722831703107, 0.01622924881159904],
    [0.008394777409957675, 0.26311282963463806, 0.013615157087217498],
    [0.7284923929554044, 0.008394777409957675, 0.013615157087217498],
    [0.26311282963463806, 0.7284923929554044, 0.013615157087217498],
    [0.26311282963463806, 0.008394777409957675, 0.013615157087217498],
    [0.7284923929554044, 0.26311282963463806, 0.013615157087217498],
    [0.008394777409957675, 0.7284923929554044, 0.013615157087217498],
];

pub(super) static TRI_9: [[f64; 3]; 19] = [
    [0.3333333333333333, 0.3333333333333333, 0.04856789814139942],
    [0.4896825191987376, 0.4896825191987376, 0.015667350113569536],
    [0.1882035356190328, 0.1882035356190328, 0.03982386946360513],
    [0.43708959149293664, 0.43708959149293664, 0.03891377050238714],
    [0.04472951339445275, 0.04472951339445275, 0.012788837829349017],
    [0.4896825191987376, 0.02063496160252476, 0.015667350113569536],
    [0.1882035356190328, 0.6235929287619344, 0.03982386946360513],
    [0.43708959149293664, 0.12582081701412673, 0.03891377050238714],
    [0.04472951339445275, 0.9105409732110945, 0.012788837829349017],
    [0.02063496160252476, 0.4896825191987376, 0.015667350113569536],
    [0.6235929287619344, 0.1882035356190328, 0.03982386946360513],
    [0.12582081701412673, 0.43708959149293664, 0.03891377050238714],
    [0.9105409732110945, 0.04472951339445275, 0.012788837829349017],
    [0.0368384120547363, 0.2219629891607657, 0.021641769688644688],
    [0.741198598784498, 0.0368384120547363, 0.021641769688644688],
    [0.2219629891607657, 0.741198598784498, 0.021641769688644688],
    [0.2219629891607657, 0.0368384120547363, 0.021641769688644688],
    [0.741198598784498, 0.2219629891607657, 0.021641769688644688],
    [0.0368384120547363, 0.741198598784498, 0.021641769688644688],
];

pub(super) static TRI_10: [[f64; 3]; 25] = [
    [0.3333333333333333, 0.3333333333333333, 0.041807437186986963],
    [0.4951734598011705, 0.4951734598011705, 0.004896295249209152],
    [0.019139415242841296, 0.019139415242841296, 0.003192679615059327],
    [0.18448501268524653, 0.18448501268524653, 0.039316884873188636],
    [0.42823482094371884, 0.42823482094371884, 0.03762366398427199],
    [0.4951734598011705, 0.009653080397658997, 0.004896295249209152],
    [0.019139415242841296, 0.9617211695143174, 0.003192679615059327],
    [0.18448501268524653, 0.6310299746295069, 0.039316884873188636],
    [0.42823482094371884, 0.14353035811256232, 0.03762366398427199],
    [0.009653080397658997, 0.4951734598011705, 0.004896295249209152],
    [0.9617211695143174, 0.019139415242841296, 0.003192679615059327],
    [0.6310299746295069, 0.18448501268524653, 0.039316884873188636],
    [0.14353035811256232, 0.42823482094371884, 0.03762366398427199],
    [0.03472362048232748, 0.13373475510086913, 0.014481140731628171],
    [0.03758272734119169, 0.3266931362813369, 0.019369524543009452],
    [0.8315416244168035, 0.03472362048232748, 0.014481140731628171],
    [0.6357241363774714, 0.03758272734119169, 0.019369524543009452],
    [0.13373475510086913, 0.8315416244168035, 0.014481140731628171],
    [0.3266931362813369, 0.6357241363774714, 0.019369524543009452],
    [0.13373475510086913, 0.03472362048232748, 0.014481140731628171],
    [0.3266931362813369, 0.03758272734119169, 0.019369524543009452],
    [0.8315416244168035, 0.13373475510086913, 0.014481140731628171],
    [0.6357241363774714, 0.3266931362813369, 0.019369524543009452],
    [0.03472362048232748, 0.8315416244168035, 0.014481140731628171],
    [0.03758272734119169, 0.6357241363774714, 0.019369524543009452],
];

pub(super) static TRI_11: [[f64; 3]; 28] = [
    [0.3333333333333333, 0.3333333333333333, 0.040722567354675644],
    [0.030846895635588123, 0.030846895635588123, 0.006124648475353982],
    [0.49878016517846074, 0.49878016517846074, 0.0062327459369406904],
    [0.11320782728669404, 0.11320782728669404, 0.02006462119065416],
    [0.4366550163931761, 0.4366550163931761, 0.031547436079949344],
    [0.21448345861926937, 0.21448345861926937, 0.033922553871847574],
    [0.030846895635588123, 0.9383062087288238, 0.006124648475353982],
    [0.49878016517846074, 0.0024396696430785125, 0.0062327459369406904],
    [0.11320782728669404, 0.7735843454266119, 0.02006462119065416],
    [0.4366550163931761, 0.12668996721364778, 0.031547436079949344],
    [0.21448345861926937, 0.5710330827614613, 0.033922553871847574],
    [0.9383062087288238, 0.030846895635588123, 0.006124648475353982],
    [0.0024396696430785125, 0.49878016517846074, 0.0062327459369406904],
    [0.7735843454266119, 0.11320782728669404, 0.02006462119065416],
    [0.12668996721364778, 0.4366550163931761, 0.031547436079949344],
    [0.5710330827614613, 0.21448345861926937, 0.033922553871847574],
    [0.014366662569555624, 0.1593036198376935, 0.007278811668904623],
    [0.04766406697215078, 0.31063121631346313, 0.020321424327943236],
    [0.8263297175927509, 0.014366662569555624, 0.007278811668904623],
    [0.6417047167143861, 0.04766406697215078, 0.020321424327943236],
    [0.1593036198376935, 0.8263297175927509, 0.007278811668904623],
    [0.31063121631346313, 0.6417047167143861, 0.020321424327943236],
    [0.1593036198376935, 0.014366662569555624, 0.007278811668904623],
    [0.31063121631346313, 0.04766406697215078, 0.020321424327943236],
    [0.8263297175927509, 0.1593036198376935, 0.007278811668904623],
    [0.6417047167143861, 0.31063121631346313, 0.020321424327943236],
    [0.014366662569555624, 0.8263297175927509, 0.007278811668904623],
    [0.04766406697215078, 0.6417047167143861, 0.020321424327943236],
];

pub(super) static TRI_12: [[f64; 3]; 33] = [
    [0.27146250701492614, 0.27146250701492614, 0.03127060659795138],
    [0.10925782765935432, 0.10925782765935432, 0.014243026034438775],
    [0.4401116486585931, 0.4401116486585931, 0.024959167464030475],
    [0.4882037509455415, 0.4882037509455415, 0.012133419040726017],
    [0.02464636343633564, 0.02464636343633564, 0.0039658212549868194],
    [0.27146250701492614, 0.45707498597014773, 0.03127060659795138],
    [0.10925782765935432, 0.7814843446812914, 0.014243026034438775],
    [0.4401116486585931, 0.11977670268281382, 0.024959167464030475],
    [0.4882037509455415, 0.02359249810891695, 0.012133419040726017],
    [0.02464636343633564, 0.9507072731273287, 0.0039658212549868194],
    [0.45707498597014773, 0.27146250701492614, 0.03127060659795138],
    [0.7814843446812914, 0.10925782765935432, 0.014243026034438775],
    [0.11977670268281382, 0.4401116486585931, 0.024959167464030475],
    [0.02359249810891695, 0.4882037509455415, 0.012133419040726017],
    [0.9507072731273287, 0.02464636343633564, 0.0039658212549868194],
    [0.1162960196779266, 0.25545422863851736, 0.021613681829707104],
    [0.021382490256170623, 0.12727971723358936, 0.007541838788255721],
    [0.023034156355267166, 0.29165567973834094, 0.01089179251930378],
    [0.6282497516835561, 0.1162960196779266, 0.021613681829707104],
    [0.85133779251024, 0.021382490256170623, 0.007541838788255721],
    [0.6853101639063919, 0.023034156355267166, 0.01089179251930378],
    [0.25545422863851736, 0.6282497516835561, 0.021613681829707104],
    [0.12727971723358936, 0.85133779251024, 0.007541838788255721],
    [0.29165567973834094, 0.6853101639063919, 0.01089179251930378],
    [0.25545422863851736, 0.1162960196779266, 0.021613681829707104],
    [0.12727971723358936, 0.021382490256170623, 0.007541838788255721],
    [0.29165567973834094, 0.023034156355267166, 0.01089179251930378],
    [0.6282497516835561, 0.25545422863851736, 0.021613681829707104],
    [0.85133779251024, 0.12727971723358936, 0.007541838788255721],
    [0.6853101639063919, 0.29165567973834094, 0.01089179251930378],
    [0.1162960196779266, 0.6282497516835561, 0.021613681829707104],
    [0.021382490256170623, 0.85133779251024, 0.007541838788255721],
    [0.023034156355267166, 0.6853101639063919, 0.01089179251930378],
];

pub(super) static TRIANGLE: [&[[f64; 3]]; 12] = [
    &TRI_1,
    &TRI_2,
    &TRI_3,
    &TRI_4,
    &TRI_5,
    &TRI_6,
    &TRI_7,
    &TRI_8,
    &TRI_9,
    &TRI_10,
    &TRI_11,
    &TRI_12,
];

// Edge rows are (t, weight) on [0, 1]; rule n has n points and is exact to degree 2n - 1.
pub(super) static GAUSS_1: [[f64; 2]; 1] = [
    [0.5, 1.0],
];

pub(super) static GAUSS_2: [[f64; 2]; 2] = [
    [0.21132486540518713, 0.5],
    [0.7886751345948129, 0.5],
];

pub(super) static GAUSS_3: [[f64; 2]; 3] = [
    [0.1127016653792583, 0.27777777777777785],
    [0.5, 0.4444444444444444],
    [0.8872983346207417, 0.27777777777777785],
];

pub(super) static GAUSS_4: [[f64; 2]; 4] = [
    [0.06943184420297371, 0.17392742256872684],
    [0.33000947820757187, 0.3260725774312731],
    [0.6699905217924281, 0.3260725774312731],
    [0.9305681557970262, 0.17392742256872684],
];

pub(super) static GAUSS_5: [[f64; 2]; 5] = [
    [0.04691007703066802, 0.11846344252809471],
    [0.23076534494715845, 0.2393143352496831],
    [0.5, 0.2844444444444445],
    [0.7692346550528415, 0.2393143352496831],
    [0.9530899229693319, 0.11846344252809471],
];

pub(super) static GAUSS_6: [[f64; 2]; 6] = [
    [0.033765242898423975, 0.08566224618958487],
    [0.16939530676686776, 0.18038078652406947],
    [0.3806904069584015, 0.23395696728634569],
    [0.6193095930415985, 0.23395696728634569],
    [0.8306046932331322, 0.18038078652406947],
    [0.966234757101576, 0.08566224618958487],
];

pub(super) static GAUSS_7: [[f64; 2]; 7] = [
    [0.025446043828620757, 0.06474248308443532],
    [0.12923440720030277, 0.1398526957446383],
    [0.2970774243113014, 0.19091502525255916],
    [0.5, 0.20897959183673448],
    [0.7029225756886985, 0.19091502525255916],
    [0.8707655927996972, 0.1398526957446383],
    [0.9745539561713792, 0.06474248308443532],
];

pub(super) static GAUSS: [&[[f64; 2]]; 7] = [
    &GAUSS_1,
    &GAUSS_2,
    &GAUSS_3,
    &GAUSS_4,
    &GAUSS_5,
    &GAUSS_6,
    &GAUSS_7,
];
