#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blipfield/classical.hpp"
#include "blipfield/constants.hpp"
#include "blipfield/dynamics.hpp"
#include "blipfield/energy.hpp"
#include "blipfield/fields.hpp"
#include "blipfield/fock.hpp"
#include "blipfield/grid.hpp"
#include "blipfield/kernel.hpp"
#include "blipfield/validate.hpp"
#include "blipfield/wavepacket.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace blipfield;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Position-representation quantisation of the 1D electromagnetic "
            "field: localized photon wave packets, dispersion-free transport, "
            "non-local field observables and the energy observable.";

  py::enum_<Direction>(m, "Direction")
      .value("left", Direction::left)
      .value("right", Direction::right);
  py::enum_<Polarization>(m, "Polarization")
      .value("H", Polarization::horizontal)
      .value("V", Polarization::vertical);

  py::class_<PhysicalConstants>(m, "PhysicalConstants")
      .def(py::init<double, double, double, double>(), "hbar"_a, "c"_a,
           "epsilon"_a, "area"_a)
      .def_static("natural", &PhysicalConstants::natural)
      .def_readonly("hbar", &PhysicalConstants::hbar)
      .def_readonly("c", &PhysicalConstants::c)
      .def_readonly("epsilon", &PhysicalConstants::epsilon)
      .def_readonly("area", &PhysicalConstants::area)
      .def_property_readonly("mu", &PhysicalConstants::mu);

  py::class_<Grid>(m, "Grid")
      .def(py::init<int, double>(), "n_points"_a, "length"_a)
      .def_property_readonly("n", &Grid::n)
      .def_property_readonly("length", &Grid::length)
      .def_property_readonly("dx", &Grid::dx)
      .def_property_readonly("dk", &Grid::dk)
      .def_property_readonly("positions", &Grid::positions)
      .def_property_readonly("wavenumbers", &Grid::wavenumbers)
      .def("__eq__", &Grid::operator==);
  m.def("make_grid", &make_grid, "n_points"_a, "length"_a);

  py::class_<WavePacket>(m, "WavePacket")
      .def(py::init<Grid>(), "grid"_a)
      .def_property_readonly("grid", &WavePacket::grid)
      .def("channel",
           [](const WavePacket& p, Direction s, Polarization lam) {
             return ComplexArray(p.channel(s, lam));
           },
           "s"_a, "lam"_a)
      .def("set_channel",
           [](WavePacket& p, Direction s, Polarization lam,
              const ComplexArray& values) {
             if (values.size() != p.grid().n()) {
               throw std::invalid_argument("array length must match the grid");
             }
             p.channel(s, lam) = values;
           },
           "s"_a, "lam"_a, "values"_a)
      .def("norm_squared", &WavePacket::norm_squared);

  m.def("make_gaussian", &make_gaussian, "grid"_a, "s"_a, "lam"_a,
        "center_x"_a, "sigma_x"_a, "k0"_a = 0.0);
  m.def("make_blip", &make_blip, "grid"_a, "s"_a, "lam"_a, "site"_a);
  m.def("make_plane_wave", &make_plane_wave, "grid"_a, "s"_a, "lam"_a,
        "mode_index"_a);
  m.def("inner_product", &inner_product, "a"_a, "b"_a);
  m.def("normalize", &normalize, "packet"_a);
  m.def("detection_probability", &detection_probability, "packet"_a, "s"_a,
        "lam"_a, "site"_a);
  m.def("position_distribution", &position_distribution, "packet"_a);
  m.def("packet_moments", [](const WavePacket& p) {
    const PacketMoments moments = packet_moments(p);
    return py::make_tuple(moments.mean, moments.variance);
  });

  m.def("to_momentum",
        [](const Grid& g, const ComplexArray& v) { return to_momentum(g, v); },
        "grid"_a, "values"_a);
  m.def("from_momentum",
        [](const Grid& g, const ComplexArray& v) {
          return from_momentum(g, v);
        },
        "grid"_a, "values"_a);

  m.def("shift_evolve", &shift_evolve, "packet"_a, "t"_a, "constants"_a);
  m.def("spectral_evolve", &spectral_evolve, "packet"_a, "t"_a, "constants"_a);
  m.def("apply_h_dyn",
        py::overload_cast<const WavePacket&, const PhysicalConstants&>(
            &apply_h_dyn),
        "packet"_a, "constants"_a);
  m.def("schrodinger_residual", &schrodinger_residual, "packet"_a, "t"_a,
        "dt"_a, "constants"_a);

  py::class_<Kernel>(m, "Kernel")
      .def_property_readonly("fourier_values", &Kernel::fourier_values)
      .def_property_readonly("position_values", &Kernel::position_values)
      .def_property_readonly("grid", &Kernel::grid);
  m.def("build_kernel", &build_kernel, "grid"_a, "constants"_a);
  m.def("regularize", &regularize, "kernel"_a, "packet"_a);
  m.def("fit_tail_exponent", &fit_tail_exponent, "values"_a, "grid"_a,
        "center_site"_a, "min_separation"_a, "max_separation"_a,
        "n_bins"_a = 12);

  py::class_<FieldProfile>(m, "FieldProfile")
      .def_readonly("e_y", &FieldProfile::e_y)
      .def_readonly("e_z", &FieldProfile::e_z)
      .def_readonly("b_y", &FieldProfile::b_y)
      .def_readonly("b_z", &FieldProfile::b_z);
  m.def("field_profile", &field_profile, "kernel"_a, "packet"_a);
  m.def("intensity_profile", &intensity_profile, "kernel"_a, "packet"_a);
  m.def("poynting_profile", &poynting_profile, "kernel"_a, "packet"_a);

  py::class_<EnergyBreakdown>(m, "EnergyBreakdown")
      .def_readonly("total", &EnergyBreakdown::total)
      .def_readonly("vacuum_reference", &EnergyBreakdown::vacuum_reference)
      .def_property_readonly("per_channel", [](const EnergyBreakdown& b) {
        py::dict out;
        for (int ch = 0; ch < 4; ++ch) {
          out[channel_name(ch)] = b.per_channel[ch];
        }
        return out;
      });
  m.def("energy_expectation", &energy_expectation, "packet"_a, "constants"_a);
  m.def("conservation_probe", &conservation_probe, "packet"_a, "times"_a,
        "constants"_a);

  py::class_<FockMode>(m, "FockMode")
      .def(py::init([](Direction s, double k) {
             return FockMode{s, k};
           }),
           "s"_a, "k"_a)
      .def_readonly("s", &FockMode::s)
      .def_readonly("k", &FockMode::k);
  py::class_<FockOperatorSet>(m, "FockOperatorSet")
      .def(py::init<std::vector<FockMode>, int, const PhysicalConstants&>(),
           "modes"_a, "n_max"_a, "constants"_a)
      .def_property_readonly("dimension", &FockOperatorSet::dimension)
      .def_property_readonly("vacuum_energy", &FockOperatorSet::vacuum_energy)
      .def("annihilator", &FockOperatorSet::annihilator, "mode"_a)
      .def("h_dyn", &FockOperatorSet::h_dyn)
      .def("h_energy", &FockOperatorSet::h_energy);
  m.def("commutator_norm", &commutator_norm, "set"_a, "which"_a);
  m.def("heisenberg_shift_deviation", &heisenberg_shift_deviation, "set"_a,
        "mode"_a, "t"_a);

  m.def("run_validation_suite", [](std::uint64_t seed) {
    ValidationOptions options;
    options.seed = seed;
    py::list out;
    for (const CheckResult& check : run_validation_suite(options)) {
      py::dict item;
      item["criterion"] = check.criterion;
      item["name"] = check.name;
      item["passed"] = check.passed;
      item["measured"] = check.measured;
      item["threshold"] = check.threshold;
      item["detail"] = check.detail;
      out.append(item);
    }
    return out;
  }, "seed"_a = 20260808);
}
