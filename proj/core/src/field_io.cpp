#include "hkt/field_io.hpp"

#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hkt/forms.hpp"

namespace hkt {

namespace {

constexpr const char* kFormat = "hkt-field-v1";

void put_le(std::ostream& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    char bytes[8];
    for (int b = 0; b < 8; ++b) bytes[b] = static_cast<char>((bits >> (8 * b)) & 0xFF);
    out.write(bytes, 8);
}

double get_le(std::istream& in) {
    unsigned char bytes[8];
    if (!in.read(reinterpret_cast<char*>(bytes), 8)) throw std::runtime_error("field snapshot: truncated payload");
    std::uint64_t bits = 0;
    for (int b = 7; b >= 0; --b) bits = (bits << 8) | bytes[b];
    double v;
    std::memcpy(&v, &bits, sizeof v);
    return v;
}

}  // namespace

void write_field(std::ostream& out, const LatticeField& f) {
    nlohmann::json header;
    header["format"] = kFormat;
    header["N"] = f.grid();
    header["n"] = f.rank();
    header["degree"] = f.degree();
    header["algebra"] = f.algebra() == Algebra::su ? "su" : "u";
    header["endianness"] = "little";
    header["scalar"] = "complex128";
    nlohmann::json names = nlohmann::json::array();
    for (BasisMask m : basis_masks(f.degree())) names.push_back(mask_name(m));
    header["components"] = names;
    out << header.dump() << '\n';
    for (int comp = 0; comp < f.components(); ++comp)
        for (int s = 0; s < f.sites(); ++s)
            for (int r = 0; r < f.rank(); ++r)
                for (int c = 0; c < f.rank(); ++c) {
                    const cplx v = f.entry(comp, r, c, s);
                    put_le(out, v.real());
                    put_le(out, v.imag());
                }
    if (!out) throw std::runtime_error("field snapshot: write failed");
}

LatticeField read_field(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("field snapshot: missing header");
    nlohmann::json h;
    try {
        h = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("field snapshot: bad header: ") + e.what());
    }
    if (h.value("format", "") != kFormat) throw std::runtime_error("field snapshot: unknown format");
    if (h.value("endianness", "") != "little") throw std::runtime_error("field snapshot: unsupported endianness");
    const std::string alg = h.value("algebra", "su");
    if (alg != "su" && alg != "u") throw std::runtime_error("field snapshot: unknown algebra " + alg);
    LatticeField f;
    try {
        f = LatticeField(h.at("N").get<int>(), h.at("n").get<int>(), h.at("degree").get<int>(),
                         alg == "su" ? Algebra::su : Algebra::u);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("field snapshot: bad header: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("field snapshot: bad header: ") + e.what());
    }
    for (int comp = 0; comp < f.components(); ++comp)
        for (int s = 0; s < f.sites(); ++s)
            for (int r = 0; r < f.rank(); ++r)
                for (int c = 0; c < f.rank(); ++c) {
                    const double re = get_le(in);
                    const double im = get_le(in);
                    f.entry(comp, r, c, s) = cplx(re, im);
                }
    return f;
}

void save_field(const std::filesystem::path& path, const LatticeField& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_field(out, f);
}

LatticeField load_field(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_field(in);
}

}  // namespace hkt
