#pragma once

// Reference decimals computed independently with mpmath at 60 digits.

#include <string>

#include "cflab/bigfloat.hpp"

namespace oracle {

inline constexpr const char* kPiSq = "9.8696044010893586188344909998761511353136994072408";
inline constexpr const char* kLog2 = "0.69314718055994530941723212145817656807550013436026";
inline constexpr const char* kCatalan = "0.91596559417721901505460351493238411077414937428167";
inline constexpr const char* kZeta2 = "1.6449340668482264364724151666460251892189499012068";
inline constexpr const char* kZeta3 = "1.2020569031595942853997381615114499907649862923405";
inline constexpr const char* kZeta4 = "1.0823232337111381915160036965411679027747509519187";
inline constexpr const char* kZeta5 = "1.0369277551433699263313654864570341680570809195019";
inline constexpr const char* kZeta7 = "1.0083492773819228268397975498497967595998635605652";

inline constexpr const char* kTwoG = "1.8319311883544380301092070298647682215482987485633";
inline constexpr const char* kTwoGMinus1Over2 = "0.41596559417721901505460351493238411077414937428167";
inline constexpr const char* kPiSqOver8 = "1.2337005501361698273543113749845188919142124259051";
inline constexpr const char* kOneMinusLog2 = "0.30685281944005469058276787854182343192449986563974";
inline constexpr const char* kPiSqPlus4Over16 = "0.86685027506808491367715568749225944595710621295255";
inline constexpr const char* k450GMinus299Over720 = "0.15720071858298410663134941905496229145606558114827";
inline constexpr const char* k17Minus6GOver128 = "0.089876612772942858669315460237544494807461748080547";
inline constexpr const char* k3Minus2GOver8 = "0.14600860145569524623634912126690397230646265642958";

inline constexpr const char* kInvTwoG = "0.54587203185195305073";        // 1/(2G)
inline constexpr const char* kInv2Log2Minus1 = "2.5886994495620898308";  // 1/(2 log 2 - 1)
inline constexpr const char* kZetaCombo4 = "6.9881951748432109453286899250048146892932834822211";
inline constexpr const char* kZetaCombo6 = "12.993891508980105442661422961801129326519545143638";
inline constexpr const char* kPiCombo30 = "7.4397830396740901407783717894867124750511670081439";
inline constexpr const char* kZetaCombo3 = "2.9591007981197201765883041594351580419083869514125";

/// Digits to which x agrees with the decimal reference (reference taken exact).
inline int digits_vs(const cflab::FloatApprox& x, const char* ref) {
  cflab::FloatApprox r(cflab::BigFloat::parse_decimal(ref, 256), cflab::BigFloat(64));
  return cflab::agree_digits(r, x);
}

}  // namespace oracle
