#include "gframe/io.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gframe {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw StructuralError(path + ": " + e.what());
    }
}

Complex parse_complex(const json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return Complex(j[0].get<double>(), j[1].get<double>());
    throw StructuralError("complex entries must be numbers or [re, im] pairs");
}

Vec parse_vector(const json& j) {
    if (!j.is_array()) throw StructuralError("expected an array of complex entries");
    Vec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = parse_complex(j[i]);
    return v;
}

GroupTable parse_group(const json& j) {
    if (!j.is_object() || !j.contains("product"))
        throw StructuralError("group file needs a \"product\" table");
    std::vector<std::vector<int>> product;
    try {
        product = j.at("product").get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
        throw StructuralError(std::string("bad product table: ") + e.what());
    }
    if (j.contains("order") &&
        j.at("order").get<int>() != static_cast<int>(product.size()))
        throw StructuralError("declared order does not match the product table");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return GroupTable::from_product(std::move(product), std::move(labels));
}

}  // namespace

GroupTable load_group(const std::string& path) { return parse_group(read_json(path)); }

RepBundle load_rep(const std::string& path) {
    const json j = read_json(path);
    if (!j.is_object() || !j.contains("group") || !j.contains("dim") ||
        !j.contains("matrices"))
        throw StructuralError("rep file needs \"group\", \"dim\" and \"matrices\"");

    RepBundle bundle;
    if (j.at("group").is_string()) {
        const auto ref = std::filesystem::path(path).parent_path() /
                         j.at("group").get<std::string>();
        bundle.group = std::make_shared<GroupTable>(load_group(ref.string()));
    } else {
        bundle.group = std::make_shared<GroupTable>(parse_group(j.at("group")));
    }

    const int dim = j.at("dim").get<int>();
    const json& mats = j.at("matrices");
    if (!mats.is_array()) throw StructuralError("\"matrices\" must be an array");
    std::vector<Mat> matrices;
    matrices.reserve(mats.size());
    for (const json& mj : mats) {
        if (!mj.is_array() || static_cast<int>(mj.size()) != dim)
            throw StructuralError("each matrix must have \"dim\" rows");
        Mat m(dim, dim);
        for (int r = 0; r < dim; ++r) {
            const Vec row = parse_vector(mj[r]);
            if (row.size() != dim) throw StructuralError("matrix row has wrong length");
            m.row(r) = row.transpose();
        }
        matrices.push_back(std::move(m));
    }
    bundle.rep = make_rep(*bundle.group, dim, std::move(matrices));
    return bundle;
}

Vec load_vector(const std::string& path) {
    const json j = read_json(path);
    if (j.is_object() && j.contains("values")) return parse_vector(j.at("values"));
    return parse_vector(j);
}

void save_vector(const std::string& path, const Vec& v) {
    json j = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        j.push_back({v(i).real(), v(i).imag()});
    std::ofstream out(path);
    if (!out) throw StructuralError("cannot write " + path);
    out << std::setprecision(17) << j.dump(2) << "\n";
}

SampledSignal load_signal(const std::string& path) {
    if (std::filesystem::path(path).extension() == ".json") {
        const json j = read_json(path);
        if (!j.is_object() || !j.contains("samples") || !j.contains("grid_start") ||
            !j.contains("grid_step"))
            throw StructuralError("signal file needs grid_start, grid_step, samples");
        return make_signal(parse_vector(j.at("samples")), j.at("grid_start").get<double>(),
                           j.at("grid_step").get<double>());
    }

    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open " + path);
    double start = 0.0, step = 0.0;
    bool have_grid = false;
    std::vector<Complex> samples;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::size_t p = line.find("grid_start=");
            std::size_t q = line.find("grid_step=");
            if (p != std::string::npos && q != std::string::npos) {
                start = std::stod(line.substr(p + 11));
                step = std::stod(line.substr(q + 10));
                have_grid = true;
            }
            continue;
        }
        std::istringstream row(line);
        double re = 0.0, im = 0.0;
        char comma = 0;
        if (!(row >> re)) throw StructuralError(path + ": bad sample line: " + line);
        if (row >> comma >> im) {
            if (comma != ',') throw StructuralError(path + ": bad sample line: " + line);
        }
        samples.emplace_back(re, im);
    }
    if (!have_grid) throw StructuralError(path + ": missing grid_start/grid_step header");
    Vec v(static_cast<Eigen::Index>(samples.size()));
    for (std::size_t i = 0; i < samples.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = samples[i];
    return make_signal(std::move(v), start, step);
}

void write_coefficients(const std::string& path, const AffineGrid& grid, const Mat& coeffs) {
    std::ofstream out(path);
    if (!out) throw StructuralError("cannot write " + path);
    out << "j,k,a,b,re,im\n" << std::setprecision(17);
    for (Eigen::Index j = 0; j < coeffs.rows(); ++j)
        for (Eigen::Index k = 0; k < coeffs.cols(); ++k)
            out << j << ',' << k << ',' << grid.scales(j) << ',' << grid.shifts(k) << ','
                << coeffs(j, k).real() << ',' << coeffs(j, k).imag() << "\n";
}

}  // namespace gframe
