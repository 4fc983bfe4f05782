// Generated with mpmath (30 digits): first six positive zeros of J^(n)_nu.
pub const ZERO_REF: &[(u32, f64, &[f64])] = &[
    (0, 0.0, &[2.4048255576957728, 5.5200781102863106, 8.6537279129110122, 11.791534439014282, 14.930917708487786, 18.071063967910923]),
    (1, 0.0, &[3.8317059702075123, 7.0155866698156188, 10.173468135062722, 13.323691936314223, 16.470630050877633, 19.615858510468242]),
    (2, 1.0, &[3.5183243928759229, 6.8662631064386461, 10.073040108397668, 13.247702401360412, 16.409424411502658, 19.564589551490102]),
    (3, 2.5, &[0.85123011560629853, 3.8849753597094916, 7.2492566886828024, 10.57419794000012, 13.813131399522129, 17.015188316290661]),
    (4, 3.0, &[3.0038943958530413, 6.251348526970943, 9.5837953803654941, 12.87070665431965, 16.104416957058165, 19.30869312291092]),
    (4, 3.001, &[0.028297561679870171, 3.0051393359578577, 6.2526616255922649, 9.5851562480861506, 12.872102305830396, 16.105838774666728]),
    (5, 4.5, &[0.70365758085387688, 3.3875493704562506, 6.5779056514717406, 9.9171465238679931, 13.258897533436401, 16.554129326194534]),
    (6, 6.0, &[1.0710643486598184, 3.7309541421892969, 6.8767189295570629, 10.203739109672239, 13.573039300404492, 16.918798212423692]),
    (2, 0.0, &[1.8411837813406593, 5.3314427735250326, 8.5363163663462858, 11.706004902592064, 14.863588633909033, 18.015527862681804]),
    (1, 0.5, &[1.1655611852072113, 4.6042167772005765, 7.7898837511445728, 10.949943648541159, 14.101725133565873, 17.249781834607896]),
    (3, 2.0, &[3.2357980437103077, 6.5680022218139505, 9.8715925823912367, 13.095382456152078, 16.286816056448687, 19.461929938385092]),
    (4, 6.0, &[3.0592876510775907, 6.4489994573377797, 9.9896733229572951, 13.498617166647687, 16.908388644851675, 20.233675796468891]),
    (2, 100.0, &[99.900099783915758, 108.77679722609859, 115.70519498291745, 121.54987130589686, 126.84992945867847, 131.80605699817727]),
    (3, 100.0, &[96.579619786637149, 105.48033234782163, 112.65737170784683, 118.80673428891188, 124.30341741035661, 129.3964317727361]),
    (8, 7.2, &[0.32687736049351497, 2.6023572466118613, 5.4668942631313593, 8.613430035221845, 11.89163330107722, 15.216844243450943]),
    (12, 11.0, &[2.0552375090786649, 4.5843503644050669, 7.4564253033573767, 10.535502806357141, 13.73982039726772, 17.015565069620658]),
];
