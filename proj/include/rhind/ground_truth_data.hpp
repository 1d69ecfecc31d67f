#pragma once

// Embedded copy of data/ground_truth.txt.

namespace rhind {

inline constexpr char kDefaultGroundTruth[] = R"GT(# Rhind papyrus 2/D ground truth (D odd composite, 9..99).
# A|<D>|<d1,d2[,d3]>                      : the scribes' selected decomposition of 2/D
# T|<D>|<delta>|<d1,d2>|<mult>|<flags>    : one printed row of the full alternatives table,
#                                           flags within {Eg, barred, slashed}, comma separated
A|9|6,18
A|15|10,30
A|21|14,42
A|25|15,75
A|27|18,54
A|33|22,66
A|35|30,42
A|39|26,78
A|45|30,90
A|49|28,196
A|51|34,102
A|55|30,330
A|57|38,114
A|63|42,126
A|65|39,195
A|69|46,138
A|75|50,150
A|77|44,308
A|81|54,162
A|85|51,255
A|87|58,174
A|91|70,130
A|93|62,186
A|95|60,380,570
A|99|66,198
T|9|2|6,18|2|Eg
T|15|2|10,30|2|Eg
T|15|2|12,20|4/3|
T|21|2|14,42|2|Eg
T|27|2|18,54|2|Eg
T|33|2|22,66|2|Eg
T|35|2|30,42|6/5|Eg
T|39|2|26,78|2|Eg
T|45|2|30,90|2|Eg
T|45|2|36,60|4/3|
T|51|2|34,102|2|Eg
T|57|2|38,114|2|Eg
T|63|2|42,126|2|Eg
T|63|2|56,72|8/7|
T|69|2|46,138|2|Eg
T|75|2|50,150|2|Eg
T|75|2|60,100|4/3|
T|81|2|54,162|2|Eg
T|87|2|58,174|2|Eg
T|93|2|62,186|2|Eg
T|99|2|66,198|2|Eg
T|99|2|90,110|10/9|
T|15|4|9,45|3|
T|21|4|15,35|5/3|
T|25|4|15,75|3|Eg
T|35|4|21,105|3|
T|45|4|27,135|3|
T|55|4|33,165|3|
T|63|4|45,105|5/3|
T|65|4|39,195|3|Eg
T|77|4|63,99|9/7|
T|85|4|51,255|3|Eg
T|95|4|57,285|3|
T|21|6|12,84|4|
T|27|6|15,135|5|
T|35|6|20,140|4|
T|49|6|28,196|4|Eg
T|55|6|40,88|8/5|
T|63|6|36,252|4|
T|77|6|44,308|4|Eg
T|81|6|54,162|2|
T|91|6|52,364|4|
T|91|6|70,130|10/7|Eg
T|27|8|15,135|5|
T|33|8|21,77|7/3|
T|45|8|25,225|5|
T|63|8|35,315|5|
T|65|8|45,117|9/5|
T|81|8|45,405|5|
T|99|8|55,495|5|
T|99|8|63,231|7/3|
T|33|10|18,198|6|
T|39|10|24,104|8/3|
T|55|10|30,330|6|Eg
T|75|10|50,150|2|
T|77|10|42,462|6|
T|99|10|54,594|6|
T|39|12|21,273|7|barred,slashed
T|45|12|27,135|3|slashed
T|65|12|35,455|7|barred,slashed
T|85|12|55,187|11/5|slashed
T|91|12|49,637|7|barred,slashed
T|15|14|8,120|8|barred,slashed
T|45|14|24,360|8|barred,slashed
T|51|14|30,170|10/3|slashed
T|75|14|40,600|8|barred,slashed
T|95|14|60,228|12/5|slashed
T|51|16|27,459|9|barred,slashed
T|57|16|33,209|11/3|slashed
T|85|16|45,765|9|barred,slashed
T|57|18|30,570|10|barred,slashed
T|63|18|36,252|4|slashed
T|21|20|11,231|11|barred,slashed
T|63|20|33,693|11|barred,slashed
T|69|22|36,828|12|barred,slashed
T|75|22|42,350|14/3|slashed
T|25|24|13,325|13|barred,slashed
T|75|24|39,975|13|barred,slashed
T|81|24|45,405|5|slashed
T|27|26|14,378|14|barred,slashed
T|81|26|42,1134|14|barred,slashed
T|87|26|48,464|16/3|slashed
T|87|28|45,1305|15|barred,slashed
T|93|28|51,527|17/3|slashed
T|93|30|48,1488|16|barred,slashed
T|99|30|54,594|6|slashed
T|33|32|17,561|17|barred,slashed
T|99|32|51,1683|17|barred,slashed
T|35|34|18,630|18|barred,slashed
T|39|38|20,780|20|barred,slashed
T|45|44|23,1035|23|barred,slashed
T|49|48|25,1225|25|barred,slashed
T|51|50|26,1326|26|barred,slashed
T|55|54|28,1540|28|barred,slashed
T|57|56|29,1653|29|barred,slashed
T|63|62|32,2016|32|barred,slashed
T|65|64|33,2145|33|barred,slashed
T|69|68|35,2415|35|barred,slashed
T|75|74|38,2850|38|barred,slashed
T|77|76|39,3003|39|barred,slashed
T|81|80|41,3321|41|barred,slashed
T|85|84|43,3655|43|barred,slashed
T|87|86|44,3828|44|barred,slashed
T|91|90|46,4186|46|barred,slashed
T|93|92|47,4371|47|barred,slashed
T|95|94|50,950|10|barred,slashed
T|99|98|50,4950|50|barred,slashed
)GT";

} // namespace rhind
