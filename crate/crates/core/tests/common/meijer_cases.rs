/// (m, n, a, b, x, G) with G computed at 40 digits.
#[rustfmt::skip]
pub const MEIJER_CASES: &[(usize, usize, &[f64], &[f64], f64, f64)] = &[
    (3, 0, &[2.21], &[1.21, 4.2, 1.0], 0.001, 0.0089433791497277647373),
    (3, 0, &[2.21], &[1.21, 4.2, 1.0], 0.05, 0.28489432934435758113),
    (3, 0, &[2.21], &[1.21, 4.2, 1.0], 0.3, 0.99754695252340409347),
    (3, 0, &[2.21], &[1.21, 4.2, 1.0], 0.8, 1.5570074210024825687),
    (3, 0, &[2.21], &[1.21, 4.2, 1.0], 1.0, 1.6551021759755592072),
    (3, 0, &[2.21], &[1.21, 4.2, 1.0], 1.5, 1.756214667689919448),
    (3, 0, &[2.21], &[1.21, 4.2, 1.0], 4.0, 1.3830021209782685663),
    (3, 0, &[2.21], &[1.21, 4.2, 1.0], 20.0, 0.10895384802893662826),
    (3, 0, &[2.21], &[1.21, 4.2, 1.0], 150.0, 5.5215900055855011394e-7),
    (3, 1, &[1.0, 2.21], &[1.21, 4.2, 1.0, 0.0], 0.001, 0.0093940445299964484781),
    (3, 1, &[1.0, 2.21], &[1.21, 4.2, 1.0, 0.0], 0.05, 0.33449077426165982156),
    (3, 1, &[1.0, 2.21], &[1.21, 4.2, 1.0, 0.0], 0.3, 1.3873757061669189039),
    (3, 1, &[1.0, 2.21], &[1.21, 4.2, 1.0, 0.0], 0.8, 2.6459000584607228808),
    (3, 1, &[1.0, 2.21], &[1.21, 4.2, 1.0, 0.0], 1.0, 3.0047138541576952373),
    (3, 1, &[1.0, 2.21], &[1.21, 4.2, 1.0, 0.0], 1.5, 3.7002839340655255863),
    (3, 1, &[1.0, 2.21], &[1.21, 4.2, 1.0, 0.0], 4.0, 5.3166324118602581497),
    (3, 1, &[1.0, 2.21], &[1.21, 4.2, 1.0, 0.0], 20.0, 6.3792841750499817145),
    (3, 1, &[1.0, 2.21], &[1.21, 4.2, 1.0, 0.0], 150.0, 6.4104871697407870934),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 2.1, 2.6, 0.5, 1.0, 0.0], 0.001, 0.49212486124649581021),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 2.1, 2.6, 0.5, 1.0, 0.0], 0.05, 1.9298694797832010669),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 2.1, 2.6, 0.5, 1.0, 0.0], 0.3, 2.9837961223385147601),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 2.1, 2.6, 0.5, 1.0, 0.0], 0.8, 3.5262042084075777334),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 2.1, 2.6, 0.5, 1.0, 0.0], 1.0, 3.6351347710819785793),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 2.1, 2.6, 0.5, 1.0, 0.0], 1.5, 3.8145180118286771502),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 2.1, 2.6, 0.5, 1.0, 0.0], 4.0, 4.1360986733353266133),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 2.1, 2.6, 0.5, 1.0, 0.0], 20.0, 4.3519386917109676604),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 2.1, 2.6, 0.5, 1.0, 0.0], 150.0, 4.3826902695236230904),
    (3, 0, &[2.21], &[1.21, 4.2, 3.0], 0.001, 0.00043145695251455828386),
    (3, 0, &[2.21], &[1.21, 4.2, 3.0], 0.05, 0.048996689568232944299),
    (3, 0, &[2.21], &[1.21, 4.2, 3.0], 0.3, 0.41877602561393350196),
    (3, 0, &[2.21], &[1.21, 4.2, 3.0], 0.8, 1.2683287150238145709),
    (3, 0, &[2.21], &[1.21, 4.2, 3.0], 1.0, 1.6007736145284128075),
    (3, 0, &[2.21], &[1.21, 4.2, 3.0], 1.5, 2.3664004656650997343),
    (3, 0, &[2.21], &[1.21, 4.2, 3.0], 4.0, 4.5557790480053793819),
    (3, 0, &[2.21], &[1.21, 4.2, 3.0], 20.0, 1.8396008973260964047),
    (3, 0, &[2.21], &[1.21, 4.2, 3.0], 150.0, 0.000076193365519327374483),
    (3, 1, &[1.0, 2.21], &[1.21, 4.2, 3.0, 0.0], 0.001, 0.00035657624604359317132),
    (3, 1, &[1.0, 2.21], &[1.21, 4.2, 3.0, 0.0], 0.05, 0.040522009118253763616),
    (3, 1, &[1.0, 2.21], &[1.21, 4.2, 3.0, 0.0], 0.3, 0.35080854984025684151),
    (3, 1, &[1.0, 2.21], &[1.21, 4.2, 3.0, 0.0], 0.8, 1.1092837782737141017),
    (3, 1, &[1.0, 2.21], &[1.21, 4.2, 3.0, 0.0], 1.0, 1.4282334511966625693),
    (3, 1, &[1.0, 2.21], &[1.21, 4.2, 3.0, 0.0], 1.5, 2.2255807557624181301),
    (3, 1, &[1.0, 2.21], &[1.21, 4.2, 3.0, 0.0], 4.0, 5.6510326645941172204),
    (3, 1, &[1.0, 2.21], &[1.21, 4.2, 3.0, 0.0], 20.0, 12.116854530792618534),
    (3, 1, &[1.0, 2.21], &[1.21, 4.2, 3.0, 0.0], 150.0, 12.820966878127137543),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 2.1, 2.6, 1.5, 2.0, 0.0], 0.001, 0.021252519280625957665),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 2.1, 2.6, 1.5, 2.0, 0.0], 0.05, 0.21528707690117390211),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 2.1, 2.6, 1.5, 2.0, 0.0], 0.3, 0.56126893714028833752),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 2.1, 2.6, 1.5, 2.0, 0.0], 0.8, 0.88093248737102128824),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 2.1, 2.6, 1.5, 2.0, 0.0], 1.0, 0.96594346478424784163),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 2.1, 2.6, 1.5, 2.0, 0.0], 1.5, 1.1288577224405771343),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 2.1, 2.6, 1.5, 2.0, 0.0], 4.0, 1.5362883645530576848),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 2.1, 2.6, 1.5, 2.0, 0.0], 20.0, 2.0323783340694179669),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 2.1, 2.6, 1.5, 2.0, 0.0], 150.0, 2.1871001182434733051),
    (3, 0, &[1.75], &[0.75, 2.296, 2.0], 0.001, 0.0045271082120087413216),
    (3, 0, &[1.75], &[0.75, 2.296, 2.0], 0.05, 0.081828196223388812613),
    (3, 0, &[1.75], &[0.75, 2.296, 2.0], 0.3, 0.25716552464666748173),
    (3, 0, &[1.75], &[0.75, 2.296, 2.0], 0.8, 0.3847087464246251762),
    (3, 0, &[1.75], &[0.75, 2.296, 2.0], 1.0, 0.40416407342782827425),
    (3, 0, &[1.75], &[0.75, 2.296, 2.0], 1.5, 0.41796637244146839584),
    (3, 0, &[1.75], &[0.75, 2.296, 2.0], 4.0, 0.29880121483691189601),
    (3, 0, &[1.75], &[0.75, 2.296, 2.0], 20.0, 0.017380172367820869552),
    (3, 0, &[1.75], &[0.75, 2.296, 2.0], 150.0, 4.7210950997389266386e-8),
    (3, 1, &[1.0, 1.75], &[0.75, 2.296, 2.0, 0.0], 0.001, 0.0060378407508177868622),
    (3, 1, &[1.0, 1.75], &[0.75, 2.296, 2.0, 0.0], 0.05, 0.11172207184001487463),
    (3, 1, &[1.0, 1.75], &[0.75, 2.296, 2.0, 0.0], 0.3, 0.39338115281562539114),
    (3, 1, &[1.0, 1.75], &[0.75, 2.296, 2.0, 0.0], 0.8, 0.7107383115525793294),
    (3, 1, &[1.0, 1.75], &[0.75, 2.296, 2.0, 0.0], 1.0, 0.79888044681718940368),
    (3, 1, &[1.0, 1.75], &[0.75, 2.296, 2.0, 0.0], 1.5, 0.96663626930679843204),
    (3, 1, &[1.0, 1.75], &[0.75, 2.296, 2.0, 0.0], 4.0, 1.3357217767831030046),
    (3, 1, &[1.0, 1.75], &[0.75, 2.296, 2.0, 0.0], 20.0, 1.5472230023374989367),
    (3, 1, &[1.0, 1.75], &[0.75, 2.296, 2.0, 0.0], 150.0, 1.5518933608371753768),
    (6, 1, &[1.0, 0.875, 1.375], &[0.375, 0.875, 1.148, 1.648, 1.0, 1.5, 0.0], 0.001, 0.27910896793432834657),
    (6, 1, &[1.0, 0.875, 1.375], &[0.375, 0.875, 1.148, 1.648, 1.0, 1.5, 0.0], 0.05, 0.96502642745560514794),
    (6, 1, &[1.0, 0.875, 1.375], &[0.375, 0.875, 1.148, 1.648, 1.0, 1.5, 0.0], 0.3, 1.4358958176317243877),
    (6, 1, &[1.0, 0.875, 1.375], &[0.375, 0.875, 1.148, 1.648, 1.0, 1.5, 0.0], 0.8, 1.6646009885389908334),
    (6, 1, &[1.0, 0.875, 1.375], &[0.375, 0.875, 1.148, 1.648, 1.0, 1.5, 0.0], 1.0, 1.7089564863832771569),
    (6, 1, &[1.0, 0.875, 1.375], &[0.375, 0.875, 1.148, 1.648, 1.0, 1.5, 0.0], 1.5, 1.7805252653848228401),
    (6, 1, &[1.0, 0.875, 1.375], &[0.375, 0.875, 1.148, 1.648, 1.0, 1.5, 0.0], 4.0, 1.9026933937234287888),
    (6, 1, &[1.0, 0.875, 1.375], &[0.375, 0.875, 1.148, 1.648, 1.0, 1.5, 0.0], 20.0, 1.9766003955205783642),
    (6, 1, &[1.0, 0.875, 1.375], &[0.375, 0.875, 1.148, 1.648, 1.0, 1.5, 0.0], 150.0, 1.9854554731481787143),
    (3, 0, &[2.21], &[1.21, 8.0, 4.0], 0.001, 0.19001048354455694337),
    (3, 0, &[2.21], &[1.21, 8.0, 4.0], 0.05, 21.603842452600322028),
    (3, 0, &[2.21], &[1.21, 8.0, 4.0], 0.3, 188.82391810599134589),
    (3, 0, &[2.21], &[1.21, 8.0, 4.0], 0.8, 618.02076978574234554),
    (3, 0, &[2.21], &[1.21, 8.0, 4.0], 1.0, 808.83811410732027766),
    (3, 0, &[2.21], &[1.21, 8.0, 4.0], 1.5, 1316.1070913346384087),
    (3, 0, &[2.21], &[1.21, 8.0, 4.0], 4.0, 4093.684964164369644),
    (3, 0, &[2.21], &[1.21, 8.0, 4.0], 20.0, 10902.845651825740078),
    (3, 0, &[2.21], &[1.21, 8.0, 4.0], 150.0, 21.255951600712572109),
    (3, 1, &[1.0, 2.21], &[1.21, 8.0, 4.0, 0.0], 0.001, 0.15703345747607979259),
    (3, 1, &[1.0, 2.21], &[1.21, 8.0, 4.0, 0.0], 0.05, 17.854422895772428276),
    (3, 1, &[1.0, 2.21], &[1.21, 8.0, 4.0, 0.0], 0.3, 156.06210949163546262),
    (3, 1, &[1.0, 2.21], &[1.21, 8.0, 4.0, 0.0], 0.8, 511.17553397893926859),
    (3, 1, &[1.0, 2.21], &[1.21, 8.0, 4.0, 0.0], 1.0, 669.42596082202887881),
    (3, 1, &[1.0, 2.21], &[1.21, 8.0, 4.0, 0.0], 1.5, 1092.0399909188493485),
    (3, 1, &[1.0, 2.21], &[1.21, 8.0, 4.0, 0.0], 4.0, 3513.7448932169425238),
    (3, 1, &[1.0, 2.21], &[1.21, 8.0, 4.0, 0.0], 20.0, 16901.784240507579095),
    (3, 1, &[1.0, 2.21], &[1.21, 8.0, 4.0, 0.0], 150.0, 24989.100479551059373),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 4.0, 4.5, 2.0, 2.5, 0.0], 0.001, 0.33679344602438843529),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 4.0, 4.5, 2.0, 2.5, 0.0], 0.05, 3.5894292320538500839),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 4.0, 4.5, 2.0, 2.5, 0.0], 0.3, 10.565819967884752415),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 4.0, 4.5, 2.0, 2.5, 0.0], 0.8, 18.921837533382197259),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 4.0, 4.5, 2.0, 2.5, 0.0], 1.0, 21.56006863890429521),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 4.0, 4.5, 2.0, 2.5, 0.0], 1.5, 27.245275980545815904),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 4.0, 4.5, 2.0, 2.5, 0.0], 4.0, 46.726186849719583788),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 4.0, 4.5, 2.0, 2.5, 0.0], 20.0, 96.162434571201414992),
    (6, 1, &[1.0, 1.105, 1.605], &[0.605, 1.105, 4.0, 4.5, 2.0, 2.5, 0.0], 150.0, 146.46549889870091116),
    (3, 0, &[2.1], &[1.1, 2.0, 2.0], 0.001, 0.0005647079249234621868),
    (3, 0, &[2.1], &[1.1, 2.0, 2.0], 0.05, 0.03382627048213576016),
    (3, 0, &[2.1], &[1.1, 2.0, 2.0], 0.3, 0.1486198889747638506),
    (3, 0, &[2.1], &[1.1, 2.0, 2.0], 0.8, 0.24318683931376040611),
    (3, 0, &[2.1], &[1.1, 2.0, 2.0], 1.0, 0.25832663084794087096),
    (3, 0, &[2.1], &[1.1, 2.0, 2.0], 1.5, 0.27032108902756375894),
    (3, 0, &[2.1], &[1.1, 2.0, 2.0], 4.0, 0.19113649541325971407),
    (3, 0, &[2.1], &[1.1, 2.0, 2.0], 20.0, 0.0099669758196699778252),
    (3, 0, &[2.1], &[1.1, 2.0, 2.0], 150.0, 2.1564776031428731505e-8),
    (3, 1, &[1.0, 2.1], &[1.1, 2.0, 2.0, 0.0], 0.001, 0.00051621571183021852273),
    (3, 1, &[1.0, 2.1], &[1.1, 2.0, 2.0, 0.0], 0.05, 0.033571671348879258017),
    (3, 1, &[1.0, 2.1], &[1.1, 2.0, 2.0, 0.0], 0.3, 0.17865393199932004062),
    (3, 1, &[1.0, 2.1], &[1.1, 2.0, 2.0, 0.0], 0.8, 0.37220545356813363243),
    (3, 1, &[1.0, 2.1], &[1.1, 2.0, 2.0, 0.0], 1.0, 0.42825032552980386589),
    (3, 1, &[1.0, 2.1], &[1.1, 2.0, 2.0, 0.0], 1.5, 0.5362065437196565472),
    (3, 1, &[1.0, 2.1], &[1.1, 2.0, 2.0, 0.0], 4.0, 0.7747173718009698379),
    (3, 1, &[1.0, 2.1], &[1.1, 2.0, 2.0, 0.0], 20.0, 0.90647356255102702188),
    (3, 1, &[1.0, 2.1], &[1.1, 2.0, 2.0, 0.0], 150.0, 0.90909090722068803153),
    (6, 1, &[1.0, 1.05, 1.55], &[0.55, 1.05, 1.0, 1.5, 1.0, 1.5, 0.0], 0.001, 0.13035493902340919263),
    (6, 1, &[1.0, 1.05, 1.55], &[0.55, 1.05, 1.0, 1.5, 1.0, 1.5, 0.0], 0.05, 0.62801165008101829005),
    (6, 1, &[1.0, 1.05, 1.55], &[0.55, 1.05, 1.0, 1.5, 1.0, 1.5, 0.0], 0.3, 1.0006754012528889695),
    (6, 1, &[1.0, 1.05, 1.55], &[0.55, 1.05, 1.0, 1.5, 1.0, 1.5, 0.0], 0.8, 1.1820199224738762264),
    (6, 1, &[1.0, 1.05, 1.55], &[0.55, 1.05, 1.0, 1.5, 1.0, 1.5, 0.0], 1.0, 1.2169232019291596443),
    (6, 1, &[1.0, 1.05, 1.55], &[0.55, 1.05, 1.0, 1.5, 1.0, 1.5, 0.0], 1.5, 1.272911601383237448),
    (6, 1, &[1.0, 1.05, 1.55], &[0.55, 1.05, 1.0, 1.5, 1.0, 1.5, 0.0], 4.0, 1.366971575525978906),
    (6, 1, &[1.0, 1.05, 1.55], &[0.55, 1.05, 1.0, 1.5, 1.0, 1.5, 0.0], 20.0, 1.4217926286973542918),
    (6, 1, &[1.0, 1.05, 1.55], &[0.55, 1.05, 1.0, 1.5, 1.0, 1.5, 0.0], 150.0, 1.4279484245751187218),
    (4, 3, &[-0.20999999999999996, -3.2, 0.0, 1.0, 2.21], &[1.21, 4.2, 2.0, 0.0, -1.21], 0.1, 39.217148666188571299),
    (4, 3, &[-0.20999999999999996, -3.2, 0.0, 1.0, 2.21], &[1.21, 4.2, 2.0, 0.0, -1.21], 0.6, 32.000139298486882667),
    (4, 3, &[-0.20999999999999996, -3.2, 0.0, 1.0, 2.21], &[1.21, 4.2, 2.0, 0.0, -1.21], 1.0, 28.330538007327096062),
    (4, 3, &[-0.20999999999999996, -3.2, 0.0, 1.0, 2.21], &[1.21, 4.2, 2.0, 0.0, -1.21], 1.9, 23.015253170577127456),
    (4, 3, &[-0.20999999999999996, -3.2, 0.0, 1.0, 2.21], &[1.21, 4.2, 2.0, 0.0, -1.21], 8.0, 11.44778080005694785),
    (3, 3, &[-0.20999999999999996, -1.2959999999999998, -1.0, 1.0], &[0.75, 2.296, 1.0, 0.0], 0.1, 0.28766082858213120762),
    (3, 3, &[-0.20999999999999996, -1.2959999999999998, -1.0, 1.0], &[0.75, 2.296, 1.0, 0.0], 0.6, 0.29701341958701390146),
    (3, 3, &[-0.20999999999999996, -1.2959999999999998, -1.0, 1.0], &[0.75, 2.296, 1.0, 0.0], 1.0, 0.24122598677300530825),
    (3, 3, &[-0.20999999999999996, -1.2959999999999998, -1.0, 1.0], &[0.75, 2.296, 1.0, 0.0], 1.9, 0.15838555959927699362),
    (3, 3, &[-0.20999999999999996, -1.2959999999999998, -1.0, 1.0], &[0.75, 2.296, 1.0, 0.0], 8.0, 0.030160644601206841755),
];
