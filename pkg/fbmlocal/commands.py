# -*- coding: utf-8 -*-

"""
fbmlocal is a numerical toolkit for local independence of fractional
Brownian motion.
Copyright (C) 2014, the fbmlocal developers

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program. If not, <see http://www.gnu.org/licenses/>.
"""

import os
import logging
from collections import OrderedDict
from . import params, paramsets, kernels, geometry, lab, sampler, sobolev, checks, widgets
from .params import validators as pv
from .paramsets import validators as sv
from .exceptions import ValidationError

LOGGER = logging.getLogger( __name__ )

# Output formats of the reports
FORMATS = [ 'csv', 'json', 'both' ]

class Command( paramsets.ParameterSet ):

    """
    Schema of a subcommand. The parameters shared by every command are
    declared here; the subclasses add their own and implement execute().
    """

    rtol = params.Real( 
        value = geometry.DEFAULT_RTOL, 
        help = 'relative pivot tolerance of the whitening',
        validators = pv.Positive()
    )

    threads = params.Count( 
        value = 1, 
        help = 'worker threads (rows and sample blocks)',
        validators = pv.Greater( 1 )
    )

    format = params.Select( 
        FORMATS, 
        value = 'csv', 
        help = 'output format: csv, json or both' 
    )

    out = params.Text( 
        help = 'output path prefix; .csv / .json are appended' 
    )

    strict = params.Switch( 
        value = False, 
        help = 'exit with status 2 when a quality flag is raised' 
    )

    verbose = params.Switch( 
        value = False, 
        help = 'debug logging' 
    )

    config = params.Text( 
        help = 'key = value config file, overridden by the flags' 
    )

    # lab.Report
    def execute( self, values ):

        """
        Runs the mapped operation.

        @param values: Validated parameter values
        @type values: dict

        @rtype: lab.Report
        """

        raise NotImplementedError( '%(cls)s.execute( values ) is not implemented!' % {
            'cls': self.__class__.__name__
        } )

    # str
    def summarize( self, result ):
        return widgets.Summary().render( result )

    # list<str>
    def getPaths( self, values ):

        """
        Returns the output files of the run, by format.

        @rtype: list<tuple<str,str>>
        """

        prefix = values.get( 'out' )
        if not prefix:
            return []

        root, extension = os.path.splitext( prefix )
        if extension in ( '.csv', '.json' ):
            prefix = root

        formats = [ 'csv', 'json' ] if values.get( 'format' ) == 'both' else [ values.get( 'format' ) ]
        return [ ( f, '{}.{}'.format( prefix, f ) ) for f in formats ]

    # list<str>
    def write( self, result, run_config ):

        """
        Writes the report in the requested formats.

        @param result: Report
        @type result: lab.Report

        @param run_config: Configuration of the run
        @type run_config: runconfig.RunConfig

        @return: Written files
        @rtype: list<str>
        """

        written = []
        for fmt, path in self.getPaths( run_config.getValue() ):
            widget = widgets.Csv( run_config.getData() ) \
                if fmt == 'csv' \
                else widgets.Json( run_config.getValue() )

            with open( path, 'w', newline = '' ) as stream:
                stream.write( widget.render( result ) )

            LOGGER.info( 'wrote %s', path )
            written.append( path )

        return written

    # bool
    def isFailed( self, result, strict = False ):

        """
        Quality failure of the run: any raised flag, escalated only with
        --strict.

        @rtype: bool
        """

        return bool( strict and result.state.isFlagged() )

class Cov( Command ):

    H = params.HurstIndex( value = 0.75, help = 'Hurst index' )
    u = params.Real( value = 1.0, help = 'first time' )
    v = params.Real( value = 0.5, help = 'second time' )
    p = params.RealList( help = 'first increment "s,t"', validators = pv.Length( 2, 2 ) )
    q = params.RealList( help = 'second increment "s,t"', validators = pv.Length( 2, 2 ) )

    # lab.Report
    def execute( self, values ):

        H, u, v = values['H'], values['u'], values['v']
        result = { 'fbm_cov': kernels.fbmCov( u, v, H ) }

        if u != v:
            result['disjoint_kernel'] = kernels.disjointKernel( u, v, H )

        if values.get( 'p' ) and values.get( 'q' ):
            result['increment_cov'] = kernels.incrementCov( values['p'], values['q'], H )

        config = { 'H': H, 'u': u, 'v': v, 'p': values.get( 'p' ), 'q': values.get( 'q' ) }
        return lab.Report( 'cov', config, values = result )

class TwoWindows( Command ):

    """
    Windows (t1 - eps, t1 + eps) and (t2 - eps, t2 + eps) with n grid
    points each.
    """

    _default_validators = [ 
        sv.Different( 't2', [ 't1', 't2' ] ), 
        sv.WindowsDisjoint() 
    ]

    H = params.HurstIndex( value = 0.75, help = 'Hurst index' )
    t1 = params.Real( value = 0.0, help = 'centre of the first window' )
    t2 = params.Real( value = 1.0, help = 'centre of the second window' )
    n = params.Count( value = 64, help = 'grid points per window', validators = pv.Greater( 4 ) )

    # lab.ScanConfig
    def getScanConfig( self, values, eps ):
        return lab.ScanConfig( values['H'], values['t1'], values['t2'], eps, values['n'], 
            rtol = values['rtol'], threads = values['threads'] )

class Angle( TwoWindows ):

    eps = params.Real( value = 0.125, help = 'window half width', validators = pv.Positive() )

    # lab.Report
    def execute( self, values ):

        cfg = self.getScanConfig( values, [ values['eps'] ] )
        table = lab.localIndependenceScan( cfg )

        row = table.getRows()[0]
        return lab.Report( self.getName(), cfg.getData(), table, values = row.getData() )

class Mi( Angle ):
    pass

class Scan( TwoWindows ):

    eps = params.Schedule( 
        value = list( lab.DEFAULT_EPS ), 
        help = 'half widths: comma list or a:b:factor',
        validators = [ pv.Positive(), pv.StrictlyDecreasing() ]
    )

    # lab.Report
    def execute( self, values ):
        cfg = self.getScanConfig( values, values['eps'] )
        return lab.Report( 'scan', cfg.getData(), lab.localIndependenceScan( cfg ) )

class AngleRate( Scan ):

    # lab.Report
    def execute( self, values ):
        return lab.angleRateCheck( values['H'], values['t1'], values['t2'], values['eps'], 
            values['n'], values['rtol'], values['threads'] )

class PastRate( Command ):

    _default_validators = sv.PastCoversWindow()

    H = params.HurstIndex( value = 0.75, help = 'Hurst index' )
    t = params.Real( value = 1.0, help = 'window centre', validators = pv.Positive() )
    T = params.Real( value = 64.0, help = 'truncation of the past (-T, 0)', validators = pv.Positive() )
    eps = params.Schedule( 
        value = list( lab.DEFAULT_EPS ), 
        help = 'half widths: comma list or a:b:factor',
        validators = [ pv.Positive(), pv.StrictlyDecreasing() ]
    )
    n = params.Count( value = 64, help = 'grid points per window', validators = pv.Greater( 4 ) )
    past_cells = params.Count( value = 48, help = 'cells of the graded past grid', validators = pv.Greater( 2 ) )
    depth = params.Real( value = 2.0 ** -16, help = 'relative length of the finest past cell', 
        validators = pv.OpenRange( 0.0, 1.0 ) )

    # lab.Report
    def execute( self, values ):
        return lab.pastRateCheck( values['H'], values['t'], values['T'], values['eps'], values['n'], 
            values['past_cells'], values['depth'], values['rtol'], values['threads'] )

class Adjacency( Command ):

    H = params.HurstIndex( value = 0.8, help = 'Hurst index' )
    eps = params.Real( value = 1.0, help = 'length of the intervals (-eps, 0) and (0, eps)', 
        validators = pv.Positive() )
    sizes = params.CountSchedule( 
        value = list( lab.DEFAULT_SIZES ), 
        help = 'points per interval: comma list or a:b:factor; 2^k + 1 sizes give nested grids',
        validators = [ pv.Greater( 2 ), pv.StrictlyIncreasing(), pv.Length( 2 ) ]
    )

    # lab.Report
    def execute( self, values ):
        return lab.adjacencyDivergence( values['H'], values['eps'], values['sizes'], values['rtol'], 
            values['threads'] )

class PastFuture( Command ):

    H = params.HurstIndex( value = 0.8, help = 'Hurst index' )
    T = params.Real( value = 16.0, help = 'truncation', validators = pv.Positive() )
    n = params.Count( value = 128, help = 'cells per side', validators = pv.Greater( 2 ) )
    depth = params.Real( value = 2.0 ** -20, help = 'relative length of the finest cell', 
        validators = pv.OpenRange( 0.0, 1.0 ) )
    tolerance = params.Real( value = 0.01, help = 'allowed relative drift', validators = pv.Positive() )

    # lab.Report
    def execute( self, values ):
        return lab.pastFutureStability( values['H'], values['T'], values['n'], values['depth'], 
            values['rtol'], values['tolerance'], values['threads'] )

class Complement( Command ):

    _default_validators = [ 
        sv.InsideInterval(),
        sv.Less( 'T', 't2', 'T' )
    ]

    H = params.HurstIndex( value = 0.75, help = 'Hurst index' )
    t1 = params.Real( value = 0.0, help = 'inner end of the left complement' )
    t = params.Real( value = 0.5, help = 'window centre' )
    t2 = params.Real( value = 1.0, help = 'inner end of the right complement' )
    eps = params.Schedule( 
        value = list( lab.DEFAULT_EPS ), 
        help = 'half widths: comma list or a:b:factor',
        validators = [ pv.Positive(), pv.StrictlyDecreasing() ]
    )
    T = params.Real( value = 16.0, help = 'truncation of the complements', validators = pv.Positive() )
    n = params.Count( value = 64, help = 'grid points per window', validators = pv.Greater( 4 ) )
    cells = params.Count( value = 48, help = 'cells of each graded complement grid', 
        validators = pv.Greater( 2 ) )
    depth = params.Real( value = 2.0 ** -16, help = 'relative length of the finest complement cell', 
        validators = pv.OpenRange( 0.0, 1.0 ) )

    # lab.Report
    def execute( self, values ):
        return lab.complementWindowScan( values['H'], values['t1'], values['t'], values['t2'], 
            values['eps'], values['T'], values['n'], values['cells'], values['depth'], values['rtol'], 
            values['threads'] )

class Levy( Command ):

    H = params.HurstIndex( value = 0.75, help = 'Hurst index' )
    c1 = params.RealList( value = [ 0.0, 0.0 ], help = 'first centre "x,y"', validators = pv.Length( 2, 2 ) )
    c2 = params.RealList( value = [ 1.0, 0.0 ], help = 'second centre "x,y"', validators = pv.Length( 2, 2 ) )
    eps = params.Schedule( 
        value = list( lab.DEFAULT_LEVY_EPS ), 
        help = 'ball radii: comma list or a:b:factor',
        validators = [ pv.Positive(), pv.StrictlyDecreasing() ]
    )
    grid = params.Count( value = 9, help = 'lattice points per axis (odd)', validators = pv.Greater( 3 ) )

    # lab.Report
    def execute( self, values ):
        return lab.levyBallScan( values['H'], values['c1'], values['c2'], values['eps'], values['grid'], 
            values['rtol'], values['threads'] )

class Constants( Command ):

    H = params.HurstIndex( value = 0.75, help = 'Hurst index' )
    dimension = params.Count( value = 1, help = 'dimension of the pairing and Riesz constants', 
        validators = pv.Greater( 1 ) )
    alpha = params.Real( help = 'Riesz exponent; with --s the dual norm decay is fitted', 
        validators = pv.Positive() )
    s = params.Real( help = 'Sobolev index of the dual norm decay', validators = pv.OpenRange( -0.5, 0.5 ) )

    # lab.Report
    def execute( self, values ):

        H, n, alpha, s = values['H'], values['dimension'], values.get( 'alpha' ), values.get( 's' )
        result = {
            'a_h': sobolev.aHConstant( H ),
            'r_h': sobolev.rHSpectral( H ),
            'pairing_constant': sobolev.pairingConstant( n, H )
        }

        if alpha is not None and alpha < n:
            result['riesz_constant'] = sobolev.rieszFourierConstant( n, alpha )

        fits = {}
        if s is not None:
            if alpha is None:
                raise ValidationError( 'the dual norm decay needs --alpha next to --s.' )

            fits['dual_norm'] = sobolev.dualNormDecayExponent( alpha, s )

        config = { 'H': H, 'dimension': n, 'alpha': alpha, 's': s }
        return lab.Report( 'constants', config, fits = fits, values = result )

class Sample( Command ):

    H = params.HurstIndex( value = 0.75, help = 'Hurst index' )
    n = params.Count( value = 256, help = 'increments per path', validators = pv.Greater( 1 ) )
    dt = params.Real( value = 1.0, help = 'grid spacing', validators = pv.Positive() )
    m = params.Count( value = 4000, help = 'number of paths', validators = pv.Greater( 1 ) )
    seed = params.Count( value = 0, help = 'seed of the generator', validators = pv.Greater( 0 ) )
    split = params.Count( help = 'split of the plug-in information check', validators = pv.Greater( 1 ) )
    method = params.Select( [ 'auto', sampler.CIRCULANT, sampler.CHOLESKY ], value = 'auto', 
        help = 'sampling method' )

    # lab.Report
    def execute( self, values ):

        method = None if values['method'] == 'auto' else values['method']
        paths = sampler.sampleFbmIncrements( values['n'], values['dt'], values['H'], values['m'], 
            values['seed'], threads = values['threads'], method = method )

        ratio, se = sampler.lag1Correlation( paths )
        result = {
            'lag1': ratio,
            'lag1_se': se,
            'lag1_theory': sampler.theoreticalLag1( values['H'] ),
            'covariance_distance': sampler.covarianceDistance( paths )
        }

        config = paths.getData()
        state = None
        if values.get( 'split' ) is not None:
            check = sampler.empiricalMiCheck( paths, values['split'], seed = values['seed'] )
            result.update( check.values )
            config.update( check.config )
            state = check.state

        if values.get( 'out' ):
            sampler.exportPaths( paths, os.path.splitext( values['out'] )[0] + '.f64' )

        return lab.Report( 'sample', config, values = result, state = state )

class Halfline( Command ):

    H = params.HurstIndex( value = 0.8, help = 'Hurst index' )
    eps = params.Real( value = 1.0, help = 'half gap of (-T, -eps) and (eps, T)', validators = pv.Positive() )
    T = params.Schedule( 
        value = [ 4.0, 8.0, 16.0, 32.0, 64.0, 128.0 ], 
        help = 'truncations: comma list or a:b:factor',
        validators = [ pv.Positive(), pv.StrictlyIncreasing(), pv.Length( 2 ) ]
    )
    cells_per_octave = params.Count( value = 4, help = 'grid points per octave', validators = pv.Greater( 1 ) )

    # lab.Report
    def execute( self, values ):
        return lab.halflineDivergence( values['H'], values['eps'], values['T'], values['cells_per_octave'], 
            values['rtol'], values['threads'] )

class CheckAll( Command ):

    """
    Acceptance suite. The result is a checks.CheckSuite, written as JSON to
    --json; a failed check is a quality failure regardless of --strict.
    """

    only = params.Text( help = 'comma list of check families ({})'.format( ', '.join( checks.FAMILIES ) ) )
    json = params.Text( help = 'path of the JSON report' )

    # checks.CheckSuite
    def execute( self, values ):
        only = [ name.strip() for name in ( values.get( 'only' ) or '' ).split( ',' ) if name.strip() ]
        return checks.checkAll( only or None, values['threads'] )

    # str
    def summarize( self, result ):
        return widgets.CheckReport().render( result )

    # list<str>
    def write( self, result, run_config ):

        path = run_config.getValue().get( 'json' )
        if not path:
            return []

        with open( path, 'w', newline = '' ) as stream:
            stream.write( widgets.Json( run_config.getValue() ).render( result ) )

        return [ path ]

    # bool
    def isFailed( self, result, strict = False ):
        return not result.isPassed()

# Subcommands in help order
COMMANDS = OrderedDict([
    ( 'cov', Cov( name = 'cov', help = 'fractional Brownian covariance and increment kernels' ) ),
    ( 'angle', Angle( name = 'angle', help = 'cosine of the angle between two windows' ) ),
    ( 'mi', Mi( name = 'mi', help = 'mutual information between two windows' ) ),
    ( 'scan', Scan( name = 'scan', help = 'two-window scan over an eps schedule' ) ),
    ( 'thm21', AngleRate( name = 'thm21', help = 'cos and MI rates of two shrinking windows' ) ),
    ( 'thm22', PastRate( name = 'thm22', help = 'cos and MI rates of a window against the past' ) ),
    ( 'adjacency', Adjacency( name = 'adjacency', help = 'MI growth of adjacent intervals under refinement' ) ),
    ( 'pastfuture', PastFuture( name = 'pastfuture', help = 'angle between the truncated past and future' ) ),
    ( 'complement', Complement( name = 'complement', help = 'window against its truncated complement' ) ),
    ( 'levy2d', Levy( name = 'levy2d', help = 'angle rate of balls of the 2-D Levy process' ) ),
    ( 'constants', Constants( name = 'constants', help = 'a_H, r_H, pairing and Riesz constants' ) ),
    ( 'sample', Sample( name = 'sample', help = 'exact sampling and Monte-Carlo cross-checks' ) ),
    ( 'halfline', Halfline( name = 'halfline', help = 'MI growth of (-T, -eps) and (eps, T) in T' ) ),
    ( 'check-all', CheckAll( name = 'check-all', help = 'run the acceptance suite' ) )
])
