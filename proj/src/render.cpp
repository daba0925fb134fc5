#include "famcake/render.hpp"

#include "famcake/fairness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace famcake {

namespace {

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1",
                          "#76b7b2", "#edc948", "#ff9da7", "#9c755f", "#bab0ac"};

void check_pair(const Instance& inst, const Allocation& x) {
    if (x.family_count() != inst.family_count()) {
        throw std::invalid_argument("render: allocation has " +
                                    std::to_string(x.family_count()) + " pieces for " +
                                    std::to_string(inst.family_count()) + " families");
    }
}

// Exact pixel coordinate: r scaled to [0,1000], printed with up to three
// decimals (trailing zeros trimmed).
std::string px(const Rational& r) {
    Rational scaled = r * Rational(1'000'000); // thousandths of a pixel
    BigInt thousandths = (scaled + Rational(1, 2)).floor();
    BigInt whole = thousandths / 1000;
    BigInt frac = thousandths % 1000;
    std::string out = whole.str();
    if (frac != 0) {
        std::string f = frac.str();
        while (f.size() < 3) f.insert(f.begin(), '0');
        while (!f.empty() && f.back() == '0') f.pop_back();
        out += "." + f;
    }
    return out;
}

} // namespace

std::string render_text(const Instance& inst, const Allocation& x) {
    check_pair(inst, x);
    std::ostringstream os;
    for (int j = 0; j < inst.family_count(); ++j) {
        const Family& fam = inst.family(j);
        os << fam.name << ": " << x.piece(j).str() << " |";
        for (const Agent& agent : fam.members) {
            os << " " << agent.name << "=" << agent.measure.value(x.piece(j)).str();
        }
        os << "\n";
    }
    return os.str();
}

std::string render_svg(const Instance& inst, const Allocation& x) {
    check_pair(inst, x);
    const int k = inst.family_count();
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
          "viewBox=\"0 0 1040 " << (150 + 22 * k) << "\">\n";
    os << "  <rect x=\"20\" y=\"40\" width=\"1000\" height=\"60\" fill=\"#eeeeee\" "
          "stroke=\"#333333\"/>\n";
    std::vector<Rational> cuts;
    for (int j = 0; j < k; ++j) {
        const char* color = kPalette[static_cast<size_t>(j) % (sizeof(kPalette) / sizeof(*kPalette))];
        for (const Interval& iv : x.piece(j).intervals()) {
            os << "  <rect x=\"" << px(iv.lo + Rational(20, 1000)) << "\" y=\"40\" width=\""
               << px(iv.length()) << "\" height=\"60\" fill=\"" << color << "\"/>\n";
            cuts.push_back(iv.lo);
            cuts.push_back(iv.hi);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (const Rational& c : cuts) {
        os << "  <line x1=\"" << px(c + Rational(20, 1000)) << "\" y1=\"36\" x2=\""
           << px(c + Rational(20, 1000)) << "\" y2=\"104\" stroke=\"#333333\"/>\n";
        os << "  <text x=\"" << px(c + Rational(20, 1000))
           << "\" y=\"120\" font-size=\"11\" text-anchor=\"middle\">" << c.str() << "</text>\n";
    }
    for (int j = 0; j < k; ++j) {
        const char* color = kPalette[static_cast<size_t>(j) % (sizeof(kPalette) / sizeof(*kPalette))];
        const int y = 140 + 22 * j;
        os << "  <rect x=\"20\" y=\"" << y << "\" width=\"16\" height=\"16\" fill=\"" << color
           << "\"/>\n";
        os << "  <text x=\"44\" y=\"" << (y + 13) << "\" font-size=\"13\">" << inst.family(j).name
           << (x.piece(j).empty() ? " (empty)" : "") << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace famcake
