// Reference counts of closed square-lattice walks by algebraic area,
// used by the self-test. Stored as exact decimal strings.
#include "areawalk/reference_tables.hpp"

namespace areawalk {

// w_16(0,0,s) for s = 0..16
const std::vector<ReferenceRow> kReferenceN16 = {
    {0, "33820044"},
    {1, "28133728"},
    {2, "18569808"},
    {3, "10127744"},
    {4, "5015108"},
    {5, "2289760"},
    {6, "1036368"},
    {7, "435040"},
    {8, "184104"},
    {9, "73056"},
    {10, "28064"},
    {11, "10336"},
    {12, "3760"},
    {13, "1088"},
    {14, "352"},
    {15, "96"},
    {16, "16"},
};

// w_32(0,0,2k) for k = 0..32
const std::vector<ReferenceRow> kReferenceN32 = {
    {0, "35816909974343308"},
    {2, "30730774567275040"},
    {4, "20250702695492528"},
    {6, "11162541356438464"},
    {8, "5548238812436036"},
    {10, "2606131312522976"},
    {12, "1185764173049648"},
    {14, "528599386326560"},
    {16, "232025420494728"},
    {18, "100444272588768"},
    {20, "42896632260736"},
    {22, "18064537994848"},
    {24, "7497160572048"},
    {26, "3062945599680"},
    {28, "1230912937696"},
    {30, "485883898144"},
    {32, "188158770672"},
    {34, "71372120768"},
    {36, "26468754368"},
    {38, "9580227072"},
    {40, "3374362720"},
    {42, "1153531776"},
    {44, "381403552"},
    {46, "121397120"},
    {48, "37007392"},
    {50, "10730048"},
    {52, "2932896"},
    {54, "743168"},
    {56, "172224"},
    {58, "35392"},
    {60, "5984"},
    {62, "704"},
    {64, "32"},
};

// w_64(0,0,8k) for k = 0..32
const std::vector<ReferenceRow> kReferenceN64 = {
    {0, "165545300328587457946733114483378060"},
    {8, "94076404911444528309828577473179632"},
    {16, "25995803765270765963867394450277316"},
    {24, "5666670146956374124427110537836464"},
    {32, "1153226797683602200745629419251848"},
    {40, "227549379699342619903432651390528"},
    {48, "43818427875706882967312469700240"},
    {56, "8236547223140168745899460134624"},
    {64, "1509668848567689731626864590576"},
    {72, "269443740291528723628592916864"},
    {80, "46755200740418381630604620576"},
    {88, "7874401690839778848133019296"},
    {96, "1284682472504095235350912480"},
    {104, "202595251838903088567109088"},
    {112, "30808052230886985702239872"},
    {120, "4505114848370853522061280"},
    {128, "631523067324574256973920"},
    {136, "84555568395913528941504"},
    {144, "10768052804477651259776"},
    {152, "1297856076087995391104"},
    {160, "147182338764286499776"},
    {168, "15593453481572357568"},
    {176, "1530045022583865088"},
    {184, "137532910981167232"},
    {192, "11168026179713536"},
    {200, "804238839635904"},
    {208, "50073152157248"},
    {216, "2598435002240"},
    {224, "106187399552"},
    {232, "3102345664"},
    {240, "53445952"},
    {248, "337280"},
    {256, "64"},
};

// w_128(0,0,32k) for k = 0..32
const std::vector<ReferenceRow> kReferenceN128Sampled = {
    {0, "14107033892003455627595738555364431713372583874555627658359467828699656588"},
    {32, "2228436346973865372505118414045430931745709423310215037548021802932444612"},
    {64, "101648073494492341917231068476717720107384723642983593593077336892311304"},
    {96, "4138993608069748554783600866744923420517908924554140420518619613801232"},
    {128, "161039050530419585154192750335083133903125485812014152417807554992752"},
    {160, "5990655660527542409703032987170349389574385570887430989257949721120"},
    {192, "212607081498518659519345753598563447387847276891069087643180434272"},
    {224, "7180685468573140315177864997582279970623419560908730966015299584"},
    {256, "230175094252501408594357574600133258427301046146398943043516640"},
    {288, "6981604222411382772500582452617169263190870111425079215100160"},
    {320, "199719075865535433065729674881219338518147678860624658510144"},
    {352, "5368527298033913806122089350610920597746585787030650139264"},
    {384, "135045555354115180818176830975766681167697961803565932544"},
    {416, "3164425279450502410030323158501645375943195422645555776"},
    {448, "68713151641725008635859193656931204985508672721950208"},
    {480, "1374505952127015217478109130769289094304815008168896"},
    {512, "25157749067368382551672816352754489434500831010624"},
    {544, "418036112117105753973563291055396236206960007680"},
    {576, "6248896425097710246404192635466796004985488768"},
    {608, "83129826788959944748514973668408227746173056"},
    {640, "971577615295350913850066599859125226822016"},
    {672, "9821475660017880045179226792418657940480"},
    {704, "84231795475145414092924391002628160000"},
    {736, "598159173318670864319035666217660160"},
    {768, "3408416436745410230222482423726336"},
    {800, "14944743352637202692364107405952"},
    {832, "47576074803718467897834797824"},
    {864, "101022080823553327727527680"},
    {896, "125308436150618578411264"},
    {928, "72273740404149925760"},
    {960, "12331255335552896"},
    {992, "198894005504"},
    {1024, "128"},
};

// w_128(0,0,s) for s = 0..50
const std::vector<ReferenceRow> kReferenceN128Head = {
    {0, "14107033892003455627595738555364431713372583874555627658359467828699656588"},
    {1, "14073024540489756117822514924210165903644384083834070921114604824937387520"},
    {2, "13971649733707854747073604997742638920388680835908039831633182254162311040"},
    {3, "13804842678848730278937916459652155579137301349966118536470616563763726848"},
    {4, "13575738773060994651860505857030914103655038881069030986805562064476333696"},
    {5, "13288551923721767759782272097304644139815783016106581017045811341916138496"},
    {6, "12948413214797319284086664242448407914453824199091389726023031185542646784"},
    {7, "12561182279806097355457462225442308237684539605233532764337500055423763456"},
    {8, "12133242855140002803069353763701516590699200716003613036151318047547629472"},
    {9, "11671294078548370593609747001881699134665437996487542221266441781188844032"},
    {10, "11182148257931487646434051781983276272565882500342861574230563344507678592"},
    {11, "10672544253010049153351478944904826439471597527788354827805062549148335104"},
    {12, "10148983533104463486711012068192141193382594825373499701433863789088034176"},
    {13, "9617593661773718904304633373159818652756444269734573303220318184291592704"},
    {14, "9084021657996363192984853927895040553785827139926450590832876868407903488"},
    {15, "8553357592722790457058340718330163005561629618875504526816660353268214784"},
    {16, "8030087037290460949613353531589155592171685160855302112351915656504449136"},
    {17, "7518069661057281307269666295830641148708036743647707948958462686542646784"},
    {18, "7020540396862514688152698604301865491459096246881249160453458736116161536"},
    {19, "6540129126309442463867511299606496515635171283605652782683183813914975488"},
    {20, "6078894723270751704557110695056249654909825969156838045794106653886321856"},
    {21, "5638369457848132892326802514067245624510978446536409183386265402448514048"},
    {22, "5219610124403197169087572852663121361048967846455456015506008042947782528"},
    {23, "4823252741185597706337492045707370096681055798396051490559383536273292544"},
    {24, "4449568211123267752840679135219502168637496351431061610206293390696154560"},
    {25, "4098516882597882094543300864455386875648834307538318275150938562496782336"},
    {26, "3769800468596787852329464684085156838053818211795157489561551261898202880"},
    {27, "3462910248525791021205199187132676285219824341773632071503658816662952192"},
    {28, "3177170876122664937040987693109193372955110988540616773757957510850541184"},
    {29, "2911779444806878073586326825585593943314167729999019517843203027017344000"},
    {30, "2665839720083321714418323305343215631455953959354972929399524498739436928"},
    {31, "2438391642983015222960418000959157149399101937828842277650338612981857280"},
    {32, "2228436346973865372505118414045430931745709423310215037548021802932444612"},
    {33, "2034957022281865027425884095112830795000912635128780482418117010044212480"},
    {34, "1856936015120144238810037562277581997286304164180057803163048725931503104"},
    {35, "1693368573323196693775885876695581677928523533672804270093502278754297344"},
    {36, "1543273651764167370982082541205030091312669462053276919643340676582675712"},
    {37, "1405702177017181187003347449503581126325851809740094418974820271138028544"},
    {38, "1279743146199721612124265905479445795679103351715805257032196555346880768"},
    {39, "1164527903905256509323459914907526931680721839237776466390159444253611008"},
    {40, "1059232906770081393425793893495889826312713629936111181503828319241859104"},
    {41, "963081249848400372657299856512949767291595510509272528870509442661204480"},
    {42, "875343194257068980987090841533961633523208576514117329633638945553767168"},
    {43, "795335902615100108878622290692284944928161247130589551602290253471878400"},
    {44, "722422558339999208051297353646125415047397507210224285230625399947401984"},
    {45, "656011017251494609812336353196499707716860262354143602383793041379316736"},
    {46, "595552115318262969604896006505353649769161700588898304566174391624406784"},
    {47, "540537734745454592951356205004292190688647181715817870001397280834058496"},
    {48, "490498711810500581480023023960448526299819664025467330552863038011851696"},
    {49, "445002653713101078324528540222967683798570547757664940781442208843469312"},
    {50, "403651717975426897194082759747429828479525616127191794646268600827549440"},
};

}  // namespace areawalk
